#ifndef MOTIVIC_MATRIX_HPP
#define MOTIVIC_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "motivic/dual.hpp"
#include "motivic/seq.hpp"

namespace motivic {

/* finitely supported grid of naturals indexed (row, col) from (0,0) */
class Grid {
  public:
    using Cells = std::map<std::pair<std::size_t, std::size_t>, Nat>;

    Grid() = default;

    Nat at(std::size_t i, std::size_t j) const {
        auto it = cells_.find({i, j});
        return it == cells_.end() ? 0 : it->second;
    }
    void set(std::size_t i, std::size_t j, Nat v) {
        if (v == 0)
            cells_.erase({i, j});
        else
            cells_[{i, j}] = v;
    }
    bool is_zero() const { return cells_.empty(); }
    const Cells& cells() const { return cells_; }

    friend bool operator==(const Grid&, const Grid&) = default;

  private:
    Cells cells_;
};

Seq t_func(const Grid& x);   // T(X)_r = sum_i x_{i,r-i}
Seq r_func(const Grid& x);   // R(X)_r = sum_i 2^i x_{i,r}
Seq s_func(const Grid& x);   // S(X)_r = sum_i x_{r,i}
bool b_func(const Grid& x);  // prod over anti-diagonals of multinomial_mod2
Grid grid_add(const Grid& a, const Grid& b);

/* grid with the vacuous xi_0-by-xi_0 slot pinned to zero */
class MilnorMatrix {
  public:
    explicit MilnorMatrix(Grid g);
    const Grid& grid() const { return g_; }
    friend bool operator==(const MilnorMatrix&, const MilnorMatrix&) = default;

  private:
    Grid g_;
};

/* grid of 0/1 choices, at most one per anti-diagonal; (0,0) may be 1 because
   it stands for a tau_0 on the left leg, not a unit */
class YMatrix {
  public:
    explicit YMatrix(Grid g);
    const Grid& grid() const { return g_; }
    friend bool operator==(const YMatrix&, const YMatrix&) = default;

  private:
    Grid g_;
};

/* coproduct of the basis monomial tau(E)xi(T) as a double sum over matrices;
   requires t_0 = 0 */
TensorElement coproduct_mono_closed(const SeqE& e, const Seq& t);

/* all pairs (Y, X) contributing to the product Q(E1)P(R1)·Q(E2)P(R2):
   R(Y+X)_r = (R2)_r for r >= 1, S(X)_i <= (R1)_i for i >= 1,
   wsum E1 + wsum(R1 - S(X)) = wsum S(Y) (index 0 of the difference dropped),
   and E2 + T(Y) with all entries <= 1; deterministic order */
void for_each_product_matrix(const SeqE& e1, const Seq& r1, const SeqE& e2, const Seq& r2,
                             const std::function<void(const YMatrix&, const MilnorMatrix&)>& emit);

std::vector<std::pair<YMatrix, MilnorMatrix>> enumerate_product_matrices(const SeqE& e1,
                                                                         const Seq& r1,
                                                                         const SeqE& e2,
                                                                         const Seq& r2);

}  // namespace motivic

#endif
