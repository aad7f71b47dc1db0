#pragma once

namespace polymod {

// An elliptic modulus k in (0,1) stored together with its complement
// k' = sqrt(1 - k^2). Both are kept because near either end of the interval
// the small one cannot be recovered from the other without cancellation.
class Modulus {
 public:
  static Modulus from_k(double k);
  static Modulus from_complement(double kc);
  // Both values supplied; checks k^2 + kc^2 = 1 to 4 eps.
  static Modulus from_pair(double k, double kc);

  double k() const { return k_; }
  double complement() const { return kc_; }
  Modulus complementary() const { return Modulus(kc_, k_); }
  // 1 - k without cancellation.
  double one_minus_k() const { return kc_ * kc_ / (1.0 + k_); }

 private:
  Modulus(double k, double kc) : k_(k), kc_(kc) {}
  double k_;
  double kc_;
};

// Arithmetic-geometric mean of two non-negative numbers.
double agm(double a, double b);

// K(k) = int_0^1 dx / sqrt((1-x^2)(1-k^2 x^2)) = pi / (2 AGM(1, k')).
// Throws DomainError unless 0 <= k < 1.
double complete_elliptic_k(double k);
double complete_elliptic_k(const Modulus& m);

// K(k) / K(k'); strictly increasing in k.
double k_ratio(const Modulus& m);
double k_ratio(double k);

// The modulus with 2 K(k)/K(k') = H. For H >= 2 the search runs on the
// complement so that k' stays accurate when k rounds to 1 (H up to ~30 in
// double precision). Throws DomainError for H <= 0.
Modulus solve_modulus_from_ratio(double H);

// multiplier * K(mu)/K(mu'). Used with multiplier 1 (pentomino) and
// 2 (tetromino).
double module_from_mu(const Modulus& mu, double multiplier);

}  // namespace polymod
