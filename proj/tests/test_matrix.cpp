#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "motivic/dual.hpp"
#include "motivic/error.hpp"
#include "motivic/matrix.hpp"
#include "motivic/product.hpp"
#include "motivic/seq.hpp"

using namespace motivic;

namespace {

Grid grid_of(std::vector<std::tuple<std::size_t, std::size_t, Nat>> cells) {
    Grid g;
    for (auto& [i, j, v] : cells) g.set(i, j, v);
    return g;
}

std::string grid_key(const Grid& g) {
    std::string out;
    for (const auto& [pos, v] : g.cells())
        out += std::to_string(pos.first) + "," + std::to_string(pos.second) + "="
               + std::to_string(v) + ";";
    return out;
}

using PairKey = std::pair<std::string, std::string>;

/* parity of a multinomial coefficient straight from iterated exact binomials */
bool multinomial_parity_oracle(const std::vector<Nat>& parts) {
    auto binom = [](std::uint64_t m, std::uint64_t n) {
        if (n > m) return std::uint64_t(0);
        unsigned __int128 out = 1;
        for (std::uint64_t k = 0; k < n; ++k) out = out * (m - k) / (k + 1);
        return std::uint64_t(out & 1);
    };
    std::uint64_t total = 0;
    std::uint64_t parity = 1;
    for (Nat p : parts) {
        total += p;
        parity &= binom(total, p);
    }
    return parity == 1;
}

bool b_oracle(const Grid& g) {
    std::size_t max_diag = 0;
    for (const auto& [pos, v] : g.cells()) max_diag = std::max(max_diag, pos.first + pos.second);
    for (std::size_t d = 0; d <= max_diag; ++d) {
        std::vector<Nat> parts;
        for (std::size_t i = 0; i <= d; ++i) parts.push_back(g.at(i, d - i));
        if (!multinomial_parity_oracle(parts)) return false;
    }
    return true;
}

/* Independent scan over a 4x4 corner: every X with the vacuous corner pinned
   and every 0/1 choice grid Y with at most one entry per anti-diagonal, kept
   when the four defining product constraints hold. */
std::set<PairKey> brute_product_pairs(const SeqE& e1, const Seq& r1, const SeqE& e2,
                                      const Seq& r2) {
    constexpr std::size_t K = 4;
    std::vector<std::pair<std::size_t, std::size_t>> xcells;
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = 0; j < K; ++j)
            if (i != 0 || j != 0) xcells.push_back({i, j});

    std::vector<Grid> xs;
    Grid cur;
    std::function<void(std::size_t)> rec_x = [&](std::size_t idx) {
        if (idx == xcells.size()) {
            xs.push_back(cur);
            return;
        }
        auto [i, j] = xcells[idx];
        for (Nat v = 0;; ++v) {
            cur.set(i, j, v);
            if (j >= 1) {
                Nat col = 0;
                for (std::size_t k = 0; k < K; ++k) col += cur.at(k, j) << k;
                if (col > r2.at(j)) break;
            }
            if (i >= 1) {
                Nat row = 0;
                for (std::size_t k = 0; k < K; ++k) row += cur.at(i, k);
                if (row > r1.at(i)) break;
            }
            if (v > 8) break;
            rec_x(idx + 1);
        }
        cur.set(i, j, 0);
    };
    rec_x(0);

    std::vector<Grid> ys;
    Grid ycur;
    std::function<void(std::size_t)> rec_y = [&](std::size_t idx) {
        if (idx == K * K) {
            ys.push_back(ycur);
            return;
        }
        std::size_t i = idx / K, j = idx % K;
        rec_y(idx + 1);
        bool diag_free = true;
        for (std::size_t k = 0; k <= i + j && k < K; ++k)
            if (i + j - k < K && ycur.at(k, i + j - k) != 0) diag_free = false;
        if (diag_free) {
            ycur.set(i, j, 1);
            rec_y(idx + 1);
            ycur.set(i, j, 0);
        }
    };
    rec_y(0);

    std::set<PairKey> out;
    for (const Grid& y : ys) {
        for (const Grid& x : xs) {
            Seq sx = drop_index0(s_func(x));
            if (!seq_leq(sx, r1)) continue;
            Seq d = seq_sub(r1, sx);
            if (drop_index0(r_func(grid_add(y, x))) != r2) continue;
            if (wsum(e1.as_seq()) + wsum(d) != wsum(s_func(y))) continue;
            if (!is_seqe(seq_add(e2.as_seq(), t_func(y)))) continue;
            out.insert({grid_key(y), grid_key(x)});
        }
    }
    return out;
}

std::set<PairKey> enumerator_pairs(const SeqE& e1, const Seq& r1, const SeqE& e2, const Seq& r2) {
    std::set<PairKey> out;
    for (const auto& [y, x] : enumerate_product_matrices(e1, r1, e2, r2))
        out.insert({grid_key(y.grid()), grid_key(x.grid())});
    return out;
}

}  // namespace

TEST_CASE("grid functionals") {
    Grid x = grid_of({{1, 0, 1}, {0, 1, 1}});
    CHECK(t_func(x) == Seq{0, 2});
    CHECK(r_func(x) == Seq{2, 1});
    CHECK(s_func(x) == Seq{1, 1});
    CHECK(t_func(Grid{}) == Seq{});
    CHECK(r_func(Grid{}) == Seq{});
    CHECK(s_func(Grid{}) == Seq{});

    Grid w = grid_of({{0, 2, 3}, {2, 1, 1}});
    CHECK(t_func(w) == Seq{0, 0, 3, 1});
    CHECK(r_func(w) == Seq{0, 4, 3});
    CHECK(s_func(w) == Seq{3, 0, 1});
}

TEST_CASE("anti-diagonal parity coefficient") {
    CHECK(!b_func(grid_of({{1, 0, 1}, {0, 1, 1}})));
    CHECK(b_func(grid_of({{2, 0, 2}, {1, 1, 1}})));
    CHECK(b_func(Grid{}));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (Nat v = 1; v <= 3; ++v) CHECK(b_func(grid_of({{i, j, v}})));
}

TEST_CASE("one entry per anti-diagonal forces parity one") {
    constexpr std::size_t K = 4;
    std::function<void(std::size_t, Grid&)> rec = [&](std::size_t d, Grid& g) {
        if (d == 2 * K - 1) {
            CHECK(b_func(g));
            CHECK(b_oracle(g));
            return;
        }
        rec(d + 1, g);
        for (std::size_t i = 0; i <= d; ++i) {
            std::size_t j = d - i;
            if (i >= K || j >= K) continue;
            for (Nat v = 1; v <= 2; ++v) {
                g.set(i, j, v);
                rec(d + 1, g);
            }
            g.set(i, j, 0);
        }
    };
    Grid g;
    rec(0, g);
}

TEST_CASE("parity coefficient matches the multinomial oracle") {
    for (Nat a = 0; a <= 2; ++a)
        for (Nat b = 0; b <= 2; ++b)
            for (Nat c = 0; c <= 2; ++c)
                for (Nat d = 0; d <= 2; ++d) {
                    Grid g = grid_of({{0, 1, a}, {1, 0, b}, {0, 2, c}, {2, 0, d}});
                    CHECK(b_func(g) == b_oracle(g));
                }
}

TEST_CASE("grid addition") {
    Grid a = grid_of({{0, 1, 1}, {2, 2, 3}});
    Grid b = grid_of({{0, 1, 2}, {1, 0, 1}});
    Grid sum = grid_add(a, b);
    CHECK(sum.at(0, 1) == 3);
    CHECK(sum.at(2, 2) == 3);
    CHECK(sum.at(1, 0) == 1);
    CHECK(grid_add(a, Grid{}) == a);
}

TEST_CASE("matrix wrappers validate their grids") {
    CHECK_NOTHROW(MilnorMatrix(grid_of({{0, 1, 5}})));
    CHECK_THROWS_AS(MilnorMatrix(grid_of({{0, 0, 1}})), Error);
    CHECK_NOTHROW(YMatrix(grid_of({{0, 0, 1}, {1, 1, 1}})));
    CHECK_THROWS_AS(YMatrix(grid_of({{0, 1, 2}})), Error);
    CHECK_THROWS_AS(YMatrix(grid_of({{0, 1, 1}, {1, 0, 1}})), Error);
}

TEST_CASE("closed-form coproduct on generators") {
    DualMono unit_m(SeqE{}, Seq{});
    DualMono tau0(SeqE{1}, Seq{});
    DualMono xi1(SeqE{}, Seq{0, 1});
    DualMono xi1sq(SeqE{}, Seq{0, 2});

    TensorElement psi_tau0 = coproduct_mono_closed(SeqE{1}, Seq{});
    CHECK(psi_tau0.term_count() == 2);
    CHECK(psi_tau0.coeff_of({unit_m, tau0}) == Coeff::one());
    CHECK(psi_tau0.coeff_of({tau0, unit_m}) == Coeff::one());

    TensorElement psi_xi1 = coproduct_mono_closed(SeqE{}, Seq{0, 1});
    CHECK(psi_xi1.term_count() == 2);
    CHECK(psi_xi1.coeff_of({xi1, unit_m}) == Coeff::one());
    CHECK(psi_xi1.coeff_of({unit_m, xi1}) == Coeff::one());

    TensorElement psi_xi1sq = coproduct_mono_closed(SeqE{}, Seq{0, 2});
    CHECK(psi_xi1sq.term_count() == 2);
    CHECK(psi_xi1sq.coeff_of({xi1sq, unit_m}) == Coeff::one());
    CHECK(psi_xi1sq.coeff_of({unit_m, xi1sq}) == Coeff::one());

    CHECK(coproduct_mono_closed(SeqE{}, Seq{}) == tensor_unit());
    CHECK_THROWS_AS(coproduct_mono_closed(SeqE{}, Seq{1}), NonzeroR0);
}

TEST_CASE("closed-form coproduct agrees with the multiplicative oracle") {
    for (const OpBasis& b : basis_up_to(12)) {
        TensorElement closed = coproduct_mono_closed(b.e(), b.r());
        TensorElement brute = coproduct_mono_bruteforce(DualMono(b.e(), b.r()));
        CHECK(closed == brute);
    }
}

TEST_CASE("enumerated matrix pairs reproduce the worked cases") {
    CHECK(enumerate_product_matrices(SeqE{1}, Seq{}, SeqE{1}, Seq{}).empty());

    auto pairs = enumerate_product_matrices(SeqE{}, Seq{0, 1}, SeqE{}, Seq{0, 1});
    REQUIRE(pairs.size() == 3);
    std::set<PairKey> got;
    for (const auto& [y, x] : pairs) got.insert({grid_key(y.grid()), grid_key(x.grid())});
    std::set<PairKey> want = {
        {grid_key(grid_of({{0, 0, 1}, {0, 1, 1}})), grid_key(Grid{})},
        {grid_key(grid_of({{1, 0, 1}})), grid_key(grid_of({{0, 1, 1}}))},
        {grid_key(Grid{}), grid_key(grid_of({{0, 1, 1}, {1, 0, 1}}))},
    };
    CHECK(got == want);

    auto unit_pairs = enumerate_product_matrices(SeqE{}, Seq{}, SeqE{}, Seq{});
    REQUIRE(unit_pairs.size() == 1);
    CHECK(unit_pairs[0].first.grid() == Grid{});
    CHECK(unit_pairs[0].second.grid() == Grid{});
}

TEST_CASE("constrained enumeration matches an independent full scan") {
    struct Input {
        SeqE e1;
        Seq r1;
        SeqE e2;
        Seq r2;
    };
    std::vector<Input> inputs = {
        {SeqE{1}, Seq{}, SeqE{1}, Seq{}},
        {SeqE{}, Seq{0, 1}, SeqE{}, Seq{0, 1}},
        {SeqE{}, Seq{}, SeqE{}, Seq{}},
        {SeqE{1}, Seq{0, 1}, SeqE{}, Seq{0, 2}},
        {SeqE{0, 1}, Seq{0, 1}, SeqE{1}, Seq{0, 1}},
        {SeqE{1}, Seq{0, 2}, SeqE{1}, Seq{0, 1}},
        {SeqE{}, Seq{0, 3}, SeqE{}, Seq{0, 2}},
        {SeqE{1, 1}, Seq{0, 1, 1}, SeqE{1}, Seq{0, 1}},
        {SeqE{}, Seq{0, 0, 1}, SeqE{}, Seq{0, 2, 1}},
    };
    for (const auto& in : inputs) {
        auto brute = brute_product_pairs(in.e1, in.r1, in.e2, in.r2);
        auto fast = enumerator_pairs(in.e1, in.r1, in.e2, in.r2);
        CHECK(brute == fast);
    }
}

TEST_CASE("enumerated pairs satisfy the defining constraints directly") {
    std::vector<std::pair<OpBasis, OpBasis>> inputs;
    for (const OpBasis& a : basis_up_to(8))
        for (const OpBasis& b : basis_up_to(8)) inputs.push_back({a, b});
    for (const auto& [a, b] : inputs) {
        for (const auto& [y, x] : enumerate_product_matrices(a.e(), a.r(), b.e(), b.r())) {
            const Grid& yg = y.grid();
            const Grid& xg = x.grid();
            CHECK(drop_index0(r_func(grid_add(yg, xg))) == b.r());
            Seq sx = drop_index0(s_func(xg));
            REQUIRE(seq_leq(sx, a.r()));
            CHECK(wsum(a.e().as_seq()) + wsum(seq_sub(a.r(), sx)) == wsum(s_func(yg)));
            CHECK(is_seqe(seq_add(b.e().as_seq(), t_func(yg))));
            CHECK(b_func(yg) == b_oracle(yg));
            CHECK(b_func(xg) == b_oracle(xg));
        }
    }
}
