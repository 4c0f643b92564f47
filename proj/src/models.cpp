#include "ainov/models.hpp"

#include <algorithm>

namespace ainov {
namespace models {

namespace {

std::string subset_label(const std::vector<int>& subset) {
    if (subset.empty()) return "1";
    std::string s = "e";
    for (int g : subset) s += std::to_string(g);
    return s;
}

/// Sign of merging two disjoint sorted generator lists into sorted order;
/// 0 when they intersect.
int merge_sign(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& merged) {
    merged.clear();
    int inversions = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining elements of a
            inversions += static_cast<int>(a.size() - i);
            merged.push_back(b[j++]);
        }
    }
    while (i < a.size()) merged.push_back(a[i++]);
    while (j < b.size()) merged.push_back(b[j++]);
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

FrobeniusTable exterior_algebra(int generators) {
    if (generators < 0 || generators > 10)
        throw std::invalid_argument("exterior algebra generator count out of range");
    FrobeniusTable table;
    table.unit = "1";

    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << generators); ++mask) {
        std::vector<int> subset;
        for (int g = 0; g < generators; ++g)
            if (mask & (1u << g)) subset.push_back(g + 1);
        subsets.push_back(std::move(subset));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (const auto& s : subsets) table.basis.emplace_back(subset_label(s), static_cast<int>(s.size()));

    std::vector<int> merged;
    for (const auto& a : subsets)
        for (const auto& b : subsets) {
            int sign = merge_sign(a, b, merged);
            if (sign == 0) continue;
            table.products[{subset_label(a), subset_label(b)}] = {
                {subset_label(merged), Rat(sign)}};
        }
    return table;
}

FrobeniusTable graded_surface_like(int odd_rank, const std::vector<std::vector<Rat>>& gram) {
    if (odd_rank < 0) throw std::invalid_argument("negative odd rank");
    std::size_t h = gram.size();
    for (const auto& row : gram)
        if (row.size() != h) throw std::invalid_argument("gram matrix must be square");

    FrobeniusTable table;
    table.unit = "1";
    table.basis.emplace_back("1", 0);
    for (int i = 1; i <= odd_rank; ++i) table.basis.emplace_back("a" + std::to_string(i), 1);
    for (std::size_t i = 1; i <= h; ++i) table.basis.emplace_back("h" + std::to_string(i), 2);
    for (int i = 1; i <= odd_rank; ++i) table.basis.emplace_back("c" + std::to_string(i), 3);
    table.basis.emplace_back("pt", 4);

    auto put = [&](const std::string& x, const std::string& y, const Rat& c) {
        if (c != 0) table.products[{x, y}] = {{"pt", c}};
    };
    for (const auto& [label, degree] : table.basis) {
        table.products[{"1", label}] = {{label, Rat(1)}};
        if (label != "1") table.products[{label, "1"}] = {{label, Rat(1)}};
    }
    for (int i = 1; i <= odd_rank; ++i) {
        put("a" + std::to_string(i), "c" + std::to_string(i), Rat(1));
        put("c" + std::to_string(i), "a" + std::to_string(i), Rat(-1));
    }
    for (std::size_t i = 1; i <= h; ++i)
        for (std::size_t j = 1; j <= h; ++j)
            put("h" + std::to_string(i), "h" + std::to_string(j), gram[i - 1][j - 1]);
    return table;
}

AInftyStructure uv_toy(const Cutoffs& cutoffs) {
    auto M = std::make_shared<GradedModule>(
        std::vector<std::pair<std::string, int>>{{"u", 1}, {"v", 2}});
    const Rat& E = cutoffs.energy;
    AInftyStructure S(M, cutoffs);

    Element curv(M, E);
    curv.add_term(M->id("v"), Nov::monomial(Rat(1), Rat(1), 0, E));
    S.op_mut(0).set_entry({}, curv);

    Element quad(M, E);
    quad.add_term(M->id("v"), Nov::constant(Rat(-1), E));
    S.op_mut(2).set_entry({M->id("u"), M->id("u")}, quad);
    return S;
}

AInftyStructure differential_toy(const Cutoffs& cutoffs) {
    auto M = std::make_shared<GradedModule>(
        std::vector<std::pair<std::string, int>>{{"u", 1}, {"v", 2}});
    const Rat& E = cutoffs.energy;
    AInftyStructure S(M, cutoffs);
    Element dv(M, E);
    dv.add_term(M->id("v"), Nov::monomial(Rat(1), Rat(1), 0, E));
    S.op_mut(1).set_entry({M->id("u")}, dv);
    return S;
}

AInftyStructure exterior_one_generator(const Cutoffs& cutoffs) {
    auto M = std::make_shared<GradedModule>(
        std::vector<std::pair<std::string, int>>{{"1", 0}, {"e", 1}});
    const Rat& E = cutoffs.energy;
    AInftyStructure S(M, cutoffs);
    MultilinearMap& m2 = S.op_mut(2);
    LabelId one = M->id("1"), e = M->id("e");
    m2.set_entry({one, one}, Element::basis(M, one, E));
    m2.set_entry({one, e}, Element::basis(M, e, E));
    // m₂(x,y) = (−1)^{deg x (deg y+1)} x∧y: the (e,1) entry picks up a sign.
    m2.set_entry({e, one}, -Element::basis(M, e, E));
    return S;
}

AInftyStructure unital_point(const Cutoffs& cutoffs) {
    auto M = std::make_shared<GradedModule>(
        std::vector<std::pair<std::string, int>>{{"1", 0}});
    AInftyStructure S(M, cutoffs);
    LabelId one = M->id("1");
    S.op_mut(2).set_entry({one, one}, Element::basis(M, one, cutoffs.energy));
    return S;
}

}  // namespace models
}  // namespace ainov
