#ifndef GJQ_BESSEL_FUNCTIONS_HPP
#define GJQ_BESSEL_FUNCTIONS_HPP

namespace gjq {

double bessel_j(double nu, double z);

// J_alpha(u + h) where u is a zero of J_alpha, through
//   J_alpha(u + h) = lambda^alpha sum_m f_m,  lambda = 1 + h/u,  w = -h (2u + h) / (2u),
//   f_0 = 0, f_1 = w J_{alpha+1}(u), m(m+1) f_{m+1} = (2m(alpha+m) w / u) f_m - w^2 f_{m-1}.
// terms > 0 fixes the number of terms after f_1; terms == 0 stops on a relative tail test.
double bessel_j_near_zero(double alpha, double u, double h, int terms = 0);

// J_alpha(u + h) and J_{alpha+1}(u + h) from the same series, given J_{alpha+1}(u).
struct BesselPair {
    double j_alpha;
    double j_alpha1;
};
BesselPair bessel_pair_near_zero(double alpha, double u, double j_alpha1_at_u, double h, int terms = 0);

struct BesselZero {
    double nu;
    int m;
    double j;
};

// Four-term McMahon expansion of j_{nu,m}.
double mcmahon_zero(double nu, int m);
// Size of the fifth McMahon term, used as its error estimate.
double mcmahon_error(double nu, int m);

// j_{nu,m}: McMahon when its error estimate is below 1e-16 j (always when m > m0 and the
// estimate allows it), otherwise Newton on J_nu from the McMahon seed.
BesselZero bessel_zero(double nu, int m, int m0 = 10);

}  // namespace gjq

#endif
