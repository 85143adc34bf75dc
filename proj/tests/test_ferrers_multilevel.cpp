#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <array>
#include <set>
#include <vector>

#include "ssc/common.hpp"
#include "ssc/ferrers.hpp"
#include "ssc/fields.hpp"
#include "ssc/matrix.hpp"
#include "ssc/multilevel.hpp"
#include "ssc/schubert.hpp"
#include "ssc/subspace.hpp"
#include "ssc/subspace_code.hpp"

using namespace ssc;

namespace {

// independent route: walk the grid dot by dot instead of summing row formulas
std::uint64_t nu_by_grid(const FerrersDiagram& F, std::uint32_t delta, std::uint32_t i) {
    const std::int64_t cut = (std::int64_t)delta - 1 - i;
    std::uint64_t total = 0;
    for (std::size_t row = i; row < F.rows(); ++row)
        for (std::uint32_t col = F.cols() - F.rowDots[row]; col < F.cols(); ++col)
            if ((std::int64_t)col < (std::int64_t)F.cols() - cut) ++total;
    return total;
}

bool word_on_diagram(const MatrixGF& m, const FerrersDiagram& F) {
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && !(i < F.rows() && j >= F.cols() - F.rowDots[i]))
                return false;
    return true;
}

std::size_t min_rank_distance(const std::vector<MatrixGF>& words) {
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, (std::size_t)rank_distance(words[i], words[j]));
    return best;
}

}  // namespace

TEST_CASE("diagram geometry and validation") {
    FerrersDiagram F({3, 3, 2});
    CHECK(F.rows() == 3);
    CHECK(F.cols() == 3);
    CHECK(F.dots() == 8);
    CHECK(FerrersDiagram(std::vector<std::uint32_t>{}).dots() == 0);
    CHECK(FerrersDiagram({0, 0}).cols() == 0);
    CHECK_THROWS_AS(FerrersDiagram({2, 3}), std::invalid_argument);
    CHECK(F == FerrersDiagram({3, 3, 2}));
    CHECK_FALSE(F == FerrersDiagram({3, 3, 3}));
}

TEST_CASE("dot-count exponents agree with per-dot grid counting") {
    const std::vector<FerrersDiagram> diagrams = {
        FerrersDiagram({3, 3, 3}), FerrersDiagram({3, 3, 2}), FerrersDiagram({3, 1, 0}),
        FerrersDiagram({5, 4, 2, 1}), FerrersDiagram({2, 2}), FerrersDiagram({4}),
        FerrersDiagram({1, 1, 1, 1}), FerrersDiagram({0, 0, 0})};
    for (const auto& F : diagrams) {
        for (std::uint32_t delta = 1; delta <= 4; ++delta) {
            std::uint64_t best = UINT64_MAX;
            for (std::uint32_t i = 0; i < delta; ++i) {
                const std::uint64_t byGrid = nu_by_grid(F, delta, i);
                CHECK(nu(F, delta, i) == byGrid);
                best = std::min(best, byGrid);
            }
            CHECK(nu_min(F, delta) == best);
            CHECK(singleton_bound(F, delta) == best);
        }
    }
    // frozen: the full 3x3 square at distance 2 keeps 6 dots either way
    CHECK(nu(FerrersDiagram({3, 3, 3}), 2, 0) == 6);
    CHECK(nu(FerrersDiagram({3, 3, 3}), 2, 1) == 6);
    CHECK(nu_min(FerrersDiagram({3, 3, 3}), 2) == 6);
    CHECK_THROWS_AS(nu(FerrersDiagram({2, 1}), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(nu(FerrersDiagram({2, 1}), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(nu_min(FerrersDiagram({2, 1}), 0), std::invalid_argument);
}

TEST_CASE("single-cell bound diagram shape and edge cases") {
    CHECK(lower_bound_diagram(3, 2, 3, 1).rowDots == std::vector<std::uint32_t>{3, 3, 2});
    CHECK(lower_bound_diagram(2, 2, 2, 2).rowDots == std::vector<std::uint32_t>{0, 0});
    CHECK(lower_bound_diagram(3, 3, 4, 2).rowDots == std::vector<std::uint32_t>{6, 2, 2});
    CHECK(lower_bound_diagram(2, 3, 1, 1).rowDots == std::vector<std::uint32_t>{4, 0});
    CHECK_THROWS_AS(lower_bound_diagram(3, 2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_diagram(3, 2, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_diagram(3, 2, 2, 3), std::invalid_argument);  // l > u
    CHECK_THROWS_AS(lower_bound_diagram(3, 2, 4, 1), std::invalid_argument);  // 2u > rk
}

TEST_CASE("closed-form exponent equals the diagram computation on a grid") {
    CHECK(closed_form_nu_min(3, 2, 3, 1, 0) == 2);
    std::size_t cases = 0;
    for (std::uint32_t k = 1; k <= 4; ++k)
        for (std::uint32_t r = 2; r <= 3; ++r)
            for (std::uint32_t u = 1; 2 * u <= r * k; ++u)
                for (std::uint32_t l = 1; l <= std::min(k, u); ++l)
                    for (std::uint32_t t = 0; t < k; ++t) {
                        const FerrersDiagram F = lower_bound_diagram(k, r, u, l);
                        CHECK(closed_form_nu_min(k, r, u, l, t) == nu_min(F, k - t));
                        ++cases;
                    }
    CHECK(cases >= 100);
    CHECK_THROWS_AS(closed_form_nu_min(3, 2, 3, 1, 3), std::invalid_argument);  // t >= k
}

TEST_CASE("distance-1 codes enumerate every supported matrix") {
    const FieldCtx F2 = make_field(2, 1);
    const FerrersDiagram D({2, 1});
    for (FerrersMethod m :
         {FerrersMethod::MrdRestrict, FerrersMethod::Greedy, FerrersMethod::Exhaustive}) {
        FerrersCode c = construct_ferrers_code(D, 1, F2, m);
        CHECK(c.size() == 8);  // q^dots
        std::set<std::vector<uint32_t>> uniq;
        for (const auto& w : c.words) {
            CHECK(word_on_diagram(w, D));
            uniq.insert(w.a);
        }
        CHECK(uniq.size() == 8);
        CHECK(c.attains_bound(2));
    }
}

TEST_CASE("empty diagram yields the lone zero word") {
    const FieldCtx F2 = make_field(2, 1);
    FerrersCode c = construct_ferrers_code(FerrersDiagram({0, 0, 0}), 2, F2, FerrersMethod::MrdRestrict);
    REQUIRE(c.size() == 1);
    CHECK(rref(c.words.front()).rank == 0);
    CHECK(c.bound_exponent() == 0);
    CHECK(c.attains_bound(2));
}

TEST_CASE("full square at distance 2 reaches the dot-count bound") {
    const FieldCtx F2 = make_field(2, 1);
    const FerrersDiagram D({2, 2});
    for (FerrersMethod m : {FerrersMethod::MrdRestrict, FerrersMethod::Exhaustive}) {
        FerrersCode c = construct_ferrers_code(D, 2, F2, m);
        CHECK(c.size() == 4);
        CHECK(c.bound_exponent() == 2);
        CHECK(c.attains_bound(2));
        CHECK(min_rank_distance(c.words) >= 2);
        for (const auto& w : c.words) CHECK(word_on_diagram(w, D));
    }
}

TEST_CASE("linear restriction on a truncated square keeps its guaranteed size") {
    const FieldCtx F2 = make_field(2, 1);
    const FerrersDiagram D({3, 3, 2});
    FerrersCode c = construct_ferrers_code(D, 3, F2, FerrersMethod::MrdRestrict);
    CHECK(c.size() == 4);
    CHECK(c.bound_exponent() == 2);
    CHECK(c.attains_bound(2));
    CHECK(min_rank_distance(c.words) >= 3);
    for (const auto& w : c.words) CHECK(word_on_diagram(w, D));
    // the exhaustive search can do no better on this diagram
    FerrersCode e = construct_ferrers_code(D, 3, F2, FerrersMethod::Exhaustive);
    CHECK(e.size() == 4);
}

TEST_CASE("greedy search is deterministic per seed and always valid") {
    const FieldCtx F3 = make_field(3, 1);
    const FerrersDiagram D({2, 2});
    FerrersCode a = construct_ferrers_code(D, 2, F3, FerrersMethod::Greedy, 0);
    FerrersCode b = construct_ferrers_code(D, 2, F3, FerrersMethod::Greedy, 0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.words[i].a == b.words[i].a);
    CHECK(min_rank_distance(a.words) >= 2);
    FerrersCode s7 = construct_ferrers_code(D, 2, F3, FerrersMethod::Greedy, 7);
    CHECK(min_rank_distance(s7.words) >= 2);
    for (const auto& w : s7.words) CHECK(word_on_diagram(w, D));
}

TEST_CASE("search caps stop oversized diagram enumerations") {
    const FieldCtx F2 = make_field(2, 1);
    std::vector<std::uint32_t> wide(1, 21);  // 21 dots in one row
    CHECK_THROWS_AS(construct_ferrers_code(FerrersDiagram(wide), 2, F2, FerrersMethod::Greedy),
                    cap_exceeded);
    // 13 dots: within the dot cap but 2^13 > the exhaustive matrix cap
    CHECK_THROWS_AS(
        construct_ferrers_code(FerrersDiagram({5, 5, 3}), 2, F2, FerrersMethod::Exhaustive),
        cap_exceeded);
    CHECK_THROWS_AS(construct_ferrers_code(FerrersDiagram({2, 2}), 0, F2, FerrersMethod::Greedy),
                    std::invalid_argument);
}

TEST_CASE("lifting checks the cell and doubles every distance") {
    const FieldCtx F2 = make_field(2, 1);
    const PivotVector p({1, 2, 4});
    const FerrersDiagram D = echelon_ferrers_of(p, 6);
    REQUIRE(D.rowDots == std::vector<std::uint32_t>{3, 3, 2});
    FerrersCode c = construct_ferrers_code(D, 2, F2, FerrersMethod::MrdRestrict);
    SubspaceCode lifted = lift(c, p, 6);
    CHECK(lifted.size() == c.size());
    CHECK(lifted.dim() == 3);
    CHECK(lifted.ambient() == 6);
    for (const auto& w : lifted.words()) CHECK(cell_of(w).p == p.p);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const std::size_t rd = rank_distance(c.words[i], c.words[j]);
            CHECK(subspace_distance(lifted.words()[i], lifted.words()[j]) == 2 * rd);
        }
    // wrong cell for this diagram
    CHECK_THROWS_AS(lift(c, PivotVector({1, 2, 3}), 6), std::invalid_argument);
}

TEST_CASE("lifting the zero word gives the pivot coordinate subspace") {
    const FieldCtx F2 = make_field(2, 1);
    FerrersCode c = construct_ferrers_code(FerrersDiagram({0, 0, 0}), 2, F2,
                                           FerrersMethod::MrdRestrict);
    SubspaceCode lifted = lift(c, PivotVector({4, 5, 6}), 6);
    REQUIRE(lifted.size() == 1);
    CHECK(lifted.words().front() == standard_flag_space(3, 6, 2));
}

TEST_CASE("cell-union size bound adds one power per selected cell") {
    // last pivots 4 and 6 in ambient 6: contributions q^2 and q^0
    const std::vector<PivotVector> cells = {PivotVector({1, 2, 4}), PivotVector({3, 5, 6})};
    CHECK(multilevel_bound_2k(cells, 6, 3, 2) == 5);
    CHECK(multilevel_bound_2k(cells, 6, 3, 3) == 10);
    CHECK(multilevel_bound_2k({}, 6, 3, 2) == 0);
    // a single cell whose last pivot sits leftmost in the window: q^{u-1}
    CHECK(multilevel_bound_2k({PivotVector({1, 2, 4})}, 6, 3, 2) == 4);
    CHECK(multilevel_bound_2k({PivotVector({4, 5, 6})}, 6, 3, 2) == 1);
    // overlapping pivot sets
    CHECK_THROWS_AS(multilevel_bound_2k({PivotVector({1, 2, 4}), PivotVector({2, 5, 6})}, 6, 3, 2),
                    std::invalid_argument);
    // two cells but the window only admits one
    CHECK_THROWS_AS(multilevel_bound_2k({PivotVector({1, 6}), PivotVector({2, 5})}, 6, 1, 2),
                    std::invalid_argument);
    // last pivot left of the window
    CHECK_THROWS_AS(multilevel_bound_2k({PivotVector({1, 2, 3})}, 6, 3, 2),
                    std::invalid_argument);
    // unequal cell dimensions
    CHECK_THROWS_AS(multilevel_bound_2k({PivotVector({1, 2, 4}), PivotVector({5, 6})}, 6, 3, 2),
                    std::invalid_argument);
}

TEST_CASE("optimised cell-union bound matches frozen values") {
    struct Row { uint32_t q, k, r, u; std::uint64_t want; };
    const std::vector<Row> rows = {
        {2, 3, 2, 3, 5},  {2, 2, 2, 2, 3},  {2, 2, 3, 3, 7},  {3, 2, 2, 2, 4},
        {2, 3, 3, 4, 13}, {2, 2, 4, 4, 15}, {2, 1, 4, 2, 3},  {3, 3, 2, 3, 10}};
    for (const auto& row : rows)
        CHECK(best_multilevel_bound_2k(row.q, row.k, row.r, row.u) == row.want);
    // it is attainable by an explicit admissible selection in the frozen case
    CHECK(multilevel_bound_2k({PivotVector({1, 2, 4}), PivotVector({3, 5, 6})}, 6, 3, 2) ==
          best_multilevel_bound_2k(2, 3, 2, 3));
}

TEST_CASE("short ambients keep the union bound under the direct-size ceiling") {
    // with fewer blocks than the window is wide, the union bound loses
    for (auto [q, k, r, u] : std::vector<std::array<uint32_t, 4>>{
             {2, 3, 2, 3}, {2, 2, 2, 3}, {3, 2, 2, 3}, {2, 4, 2, 4}}) {
        REQUIRE(r < u);
        const std::uint64_t direct = (upow_checked(q, u) - 1) / (q - 1);
        CHECK(best_multilevel_bound_2k(q, k, r, u) < direct);
    }
}

TEST_CASE("assembled union over cells matches the frozen benchmark") {
    const FieldCtx F2 = make_field(2, 1);
    SubspaceCode code = multilevel_assemble(3, 2, 3, 1, 0, F2);
    CHECK(code.size() == 5);
    CHECK(code.dim() == 3);
    CHECK(code.ambient() == 6);
    CHECK(min_distance(code) == 6);
    std::set<std::vector<uint32_t>> cells;
    for (const auto& w : code.words()) cells.insert(cell_of(w).p);
    CHECK(cells == std::set<std::vector<uint32_t>>{{1, 2, 4}, {3, 5, 6}});
    const Subspace U = standard_flag_space(3, 6, 2);
    for (const auto& w : code.words()) CHECK(intersection_dim(w, U) >= 1);
    // deterministic at a fixed seed
    CHECK(multilevel_assemble(3, 2, 3, 1, 0, F2) == code);
}

TEST_CASE("assembly stays valid on small degenerate parameter sets") {
    const FieldCtx F2 = make_field(2, 1);
    const FieldCtx F3 = make_field(3, 1);
    struct P { uint32_t k, r, u, l, t; const FieldCtx* f; };
    for (const P& p : {P{2, 2, 2, 1, 0, &F2}, P{2, 2, 2, 2, 1, &F2}, P{1, 3, 2, 1, 0, &F3},
                       P{3, 2, 3, 2, 1, &F2}}) {
        SubspaceCode code = multilevel_assemble(p.k, p.r, p.u, p.l, p.t, *p.f);
        const uint32_t n = p.r * p.k;
        const Subspace U = standard_flag_space(p.u, n, p.f->q());
        CHECK(code.size() >= 1);
        for (const auto& w : code.words()) CHECK(intersection_dim(w, U) >= p.l);
        const auto& ws = code.words();
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = i + 1; j < ws.size(); ++j)
                CHECK(intersection_dim(ws[i], ws[j]) <= p.t);
    }
}

TEST_CASE("assembly validates its parameters") {
    const FieldCtx F2 = make_field(2, 1);
    CHECK_THROWS_AS(multilevel_assemble(3, 2, 3, 0, 0, F2), std::invalid_argument);  // l = 0
    CHECK_THROWS_AS(multilevel_assemble(3, 2, 3, 4, 0, F2), std::invalid_argument);  // l > min
    CHECK_THROWS_AS(multilevel_assemble(3, 2, 7, 1, 0, F2), std::invalid_argument);  // u > n
    CHECK_THROWS_AS(multilevel_assemble(3, 2, 3, 1, 3, F2), std::invalid_argument);  // t >= k
    CHECK_THROWS_AS(multilevel_assemble(3, 2, 2, 3, 0, F2), std::invalid_argument);  // l > u
}
