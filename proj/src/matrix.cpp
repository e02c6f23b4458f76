#include "motivic/matrix.hpp"

#include <algorithm>

#include "motivic/error.hpp"

namespace motivic {

namespace {

Seq seq_from_slots(const std::map<std::size_t, Nat>& slots) {
    std::size_t len = 0;
    for (const auto& [i, v] : slots)
        if (v != 0) len = std::max(len, i + 1);
    std::vector<Nat> out(len, 0);
    for (const auto& [i, v] : slots)
        if (v != 0) out[i] = v;
    return Seq(std::move(out));
}

}  // namespace

Seq t_func(const Grid& x) {
    std::map<std::size_t, Nat> slots;
    for (const auto& [ij, v] : x.cells()) slots[ij.first + ij.second] = checked_add(slots[ij.first + ij.second], v);
    return seq_from_slots(slots);
}

Seq r_func(const Grid& x) {
    std::map<std::size_t, Nat> slots;
    for (const auto& [ij, v] : x.cells())
        slots[ij.second] = checked_add(slots[ij.second], checked_shl(v, ij.first));
    return seq_from_slots(slots);
}

Seq s_func(const Grid& x) {
    std::map<std::size_t, Nat> slots;
    for (const auto& [ij, v] : x.cells()) slots[ij.first] = checked_add(slots[ij.first], v);
    return seq_from_slots(slots);
}

bool b_func(const Grid& x) {
    std::map<std::size_t, std::vector<Nat>> diagonals;
    for (const auto& [ij, v] : x.cells()) diagonals[ij.first + ij.second].push_back(v);
    for (const auto& [r, parts] : diagonals)
        if (!multinomial_mod2(parts)) return false;
    return true;
}

Grid grid_add(const Grid& a, const Grid& b) {
    Grid out = a;
    for (const auto& [ij, v] : b.cells()) out.set(ij.first, ij.second, checked_add(out.at(ij.first, ij.second), v));
    return out;
}

MilnorMatrix::MilnorMatrix(Grid g) : g_(std::move(g)) {
    if (g_.at(0, 0) != 0) throw Error("matrix entry (0,0) must be 0");
}

YMatrix::YMatrix(Grid g) : g_(std::move(g)) {
    std::map<std::size_t, Nat> diag;
    for (const auto& [ij, v] : g_.cells()) {
        if (v > 1) throw Error("choice matrix entries must be 0 or 1");
        diag[ij.first + ij.second] += v;
    }
    for (const auto& [r, n] : diag)
        if (n > 1) throw Error("choice matrix has two entries on one anti-diagonal");
}

namespace {

/* all grids with prescribed anti-diagonal sums T and (0,0) = 0 */
std::vector<Grid> grids_with_t(const Seq& t) {
    std::vector<Grid> out;
    std::vector<std::size_t> diags;
    for (std::size_t r = 1; r < t.size(); ++r)
        if (t.at(r) != 0) diags.push_back(r);
    Grid current;
    auto fill_diag = [&](auto&& self, std::size_t d) -> void {
        if (d == diags.size()) {
            out.push_back(current);
            return;
        }
        std::size_t r = diags[d];
        // distribute t_r over cells (r,0), (r-1,1), ..., (0,r)
        auto place = [&](auto&& inner, std::size_t i, Nat left) -> void {
            if (i == 0) {
                current.set(0, r, left);
                self(self, d + 1);
                current.set(0, r, 0);
                return;
            }
            for (Nat v = 0; v <= left; ++v) {
                current.set(i, r - i, v);
                inner(inner, i - 1, left - v);
                current.set(i, r - i, 0);
            }
        };
        place(place, r, t.at(r));
    };
    fill_diag(fill_diag, 0);
    return out;
}

struct YChoice {
    Grid grid;
    Seq t;  // T(Y)
};

/* all 0/1 grids choosing, for each k with e_k = 1, either nothing or one
   cell (i, k-i) on anti-diagonal k */
std::vector<YChoice> y_choices(const SeqE& e) {
    std::vector<YChoice> out;
    std::vector<std::size_t> ks;
    for (std::size_t k = 0; k < e.size(); ++k)
        if (e.at(k) != 0) ks.push_back(k);
    Grid current;
    std::map<std::size_t, Nat> tslots;
    auto step = [&](auto&& self, std::size_t d) -> void {
        if (d == ks.size()) {
            out.push_back({current, seq_from_slots(tslots)});
            return;
        }
        std::size_t k = ks[d];
        self(self, d + 1);
        tslots[k] = 1;
        for (std::size_t i = 0; i <= k; ++i) {
            current.set(i, k - i, 1);
            self(self, d + 1);
            current.set(i, k - i, 0);
        }
        tslots[k] = 0;
    };
    step(step, 0);
    return out;
}

}  // namespace

TensorElement coproduct_mono_closed(const SeqE& e, const Seq& t) {
    if (t.at(0) != 0) throw NonzeroR0("xi exponent sequence has nonzero entry at index 0");
    struct XData {
        bool b;
        Seq s_pos;  // S(X) with index 0 dropped
        Seq r;      // R(X)
    };
    std::vector<XData> xs;
    for (const Grid& x : grids_with_t(t))
        xs.push_back({b_func(x), drop_index0(s_func(x)), r_func(x)});
    TensorElement out;
    for (const YChoice& y : y_choices(e)) {
        if (!b_func(y.grid)) continue;
        if (!binom_seq_mod2(e.as_seq(), seq_sub(e.as_seq(), y.t))) continue;
        SeqE right_tau(seq_sub(e.as_seq(), y.t));
        Seq ry = r_func(y.grid);
        DualElement split = simplify_tau(s_func(y.grid));
        for (const XData& x : xs) {
            if (!x.b) continue;
            Seq right_xi = drop_index0(seq_add(ry, x.r));
            for (const auto& [m, c] : split.terms()) {
                DualMono left(m.tau(), seq_add(m.xi(), x.s_pos));
                out.add_term({left, DualMono(right_tau, right_xi)}, c);
            }
        }
    }
    return out;
}

void for_each_product_matrix(const SeqE& e1, const Seq& r1, const SeqE& e2, const Seq& r2,
                             const std::function<void(const YMatrix&, const MilnorMatrix&)>& emit) {
    if (r1.at(0) != 0 || r2.at(0) != 0)
        throw NonzeroR0("xi exponent sequence has nonzero entry at index 0");
    struct Cell {
        std::size_t i, j;
    };
    std::vector<Cell> cells;
    for (std::size_t i = 1; i < r1.size(); ++i)
        if (r1.at(i) != 0) cells.push_back({i, 0});
    for (std::size_t j = 1; j < r2.size(); ++j) {
        if (r2.at(j) == 0) continue;
        for (std::size_t i = 0; i < 64 && (Nat(1) << i) <= r2.at(j); ++i)
            if (i == 0 || r1.at(i) != 0) cells.push_back({i, j});
    }
    std::vector<Nat> row_rem(r1.size(), 0);
    for (std::size_t i = 1; i < r1.size(); ++i) row_rem[i] = r1.at(i);
    std::vector<Nat> col_rem(r2.size(), 0);
    for (std::size_t j = 1; j < r2.size(); ++j) col_rem[j] = r2.at(j);

    Nat wsum_e1 = wsum(e1.as_seq());
    Grid x;
    auto finalize = [&]() {
        __int128 wsum_d = 0;
        for (std::size_t i = 1; i < row_rem.size(); ++i)
            wsum_d += __int128(row_rem[i]) << i;
        __int128 w0 = __int128(wsum_e1) + wsum_d;
        for (std::size_t j = 1; j < col_rem.size(); ++j) w0 -= __int128(col_rem[j]);
        if (w0 < 0) return;
        if (w0 > __int128(~Nat(0))) throw Overflow("forced choice-matrix column exceeds 64 bits");
        Grid y;
        std::map<std::size_t, Nat> tslots;
        auto put_column = [&](std::size_t j, Nat w) {
            for (std::size_t i = 0; i < 64; ++i)
                if (w & (Nat(1) << i)) {
                    y.set(i, j, 1);
                    tslots[i + j] = checked_add(tslots[i + j], 1);
                }
        };
        put_column(0, Nat(w0));
        for (std::size_t j = 1; j < col_rem.size(); ++j) put_column(j, col_rem[j]);
        for (const auto& [r, n] : tslots) {
            if (n > 1) return;
            if (checked_add(e2.at(r), n) > 1) return;
        }
        emit(YMatrix(y), MilnorMatrix(x));
    };
    auto dfs = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            finalize();
            return;
        }
        auto [i, j] = cells[k];
        Nat maxv;
        if (j == 0) {
            maxv = row_rem[i];
        } else {
            maxv = col_rem[j] >> i;
            if (i >= 1) maxv = std::min(maxv, row_rem[i]);
        }
        for (Nat v = 0; v <= maxv; ++v) {
            x.set(i, j, v);
            if (i >= 1) row_rem[i] -= v;
            if (j >= 1) col_rem[j] -= v << i;
            self(self, k + 1);
            if (i >= 1) row_rem[i] += v;
            if (j >= 1) col_rem[j] += v << i;
            x.set(i, j, 0);
        }
    };
    dfs(dfs, 0);
}

std::vector<std::pair<YMatrix, MilnorMatrix>> enumerate_product_matrices(const SeqE& e1,
                                                                         const Seq& r1,
                                                                         const SeqE& e2,
                                                                         const Seq& r2) {
    std::vector<std::pair<YMatrix, MilnorMatrix>> out;
    for_each_product_matrix(e1, r1, e2, r2,
                            [&](const YMatrix& y, const MilnorMatrix& x) { out.emplace_back(y, x); });
    return out;
}

}  // namespace motivic
