#ifndef MOTIVIC_COEFF_HPP
#define MOTIVIC_COEFF_HPP

#include <optional>
#include <utility>
#include <vector>

#include "motivic/seq.hpp"

namespace motivic {

enum class EvalProfile {
    generic,    // keep tau, rho
    rho_zero,   // rho = 0
    classical,  // tau = 1, rho = 0
};

/* element of F2[tau, rho]: the set of monomials tau^a rho^b with coefficient 1,
   kept as a sorted vector of (a, b); duplicate pairs cancel mod 2 */
class Coeff {
  public:
    using Monomial = std::pair<Nat, Nat>;

    Coeff() = default;

    static Coeff zero() { return Coeff{}; }
    static Coeff one() { return monomial(0, 0); }
    static Coeff monomial(Nat tau_exp, Nat rho_exp);
    static Coeff from_monomials(std::vector<Monomial> monomials);

    bool is_zero() const { return m_.empty(); }
    bool is_one() const { return m_.size() == 1 && m_[0] == Monomial{0, 0}; }
    const std::vector<Monomial>& monomials() const { return m_; }

    friend bool operator==(const Coeff&, const Coeff&) = default;

  private:
    std::vector<Monomial> m_;
};

Coeff coeff_add(const Coeff& x, const Coeff& y);
Coeff coeff_mul(const Coeff& x, const Coeff& y);
Coeff coeff_pow(const Coeff& x, Nat n);
Coeff coeff_eval(const Coeff& x, EvalProfile profile);

enum class DegreeSide {
    dual,       // tau -> (0,-1), rho -> (-1,-1)
    operation,  // tau -> (0, 1), rho -> ( 1, 1)
};

/* common bidegree of all monomials; nullopt if mixed or zero */
std::optional<Bidegree> coeff_bidegree(const Coeff& x, DegreeSide side);

}  // namespace motivic

#endif
