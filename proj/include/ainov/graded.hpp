#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ainov/novikov.hpp"

namespace ainov {

using LabelId = std::uint32_t;

/// Finite-rank graded module with named basis elements. Degrees are arbitrary
/// integers. Immutable after construction.
class GradedModule {
public:
    /// basis: (label, degree) pairs in presentation order. Labels must be unique.
    explicit GradedModule(std::vector<std::pair<std::string, int>> basis);

    std::size_t rank() const { return labels_.size(); }
    const std::string& label(LabelId id) const { return labels_.at(id); }
    int degree(LabelId id) const { return degrees_.at(id); }
    LabelId id(const std::string& label) const;
    bool has_label(const std::string& label) const;

    /// Basis ids of the given degree, in presentation order.
    const std::vector<LabelId>& labels_of_degree(int degree) const;
    std::map<int, std::size_t> ranks_by_degree() const;
    std::vector<int> degrees_present() const;

    bool operator==(const GradedModule& o) const {
        return labels_ == o.labels_ && degrees_ == o.degrees_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::map<std::string, LabelId> index_;
    std::map<int, std::vector<LabelId>> by_degree_;
    static const std::vector<LabelId> empty_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

/// Sparse module element with Novikov coefficients. Zero coefficients are
/// never stored; the scalar cutoff is carried so that zero elements stay
/// arithmetically compatible.
class Element {
public:
    Element(ModulePtr module, const Rat& cutoff);

    static Element zero(ModulePtr module, const Rat& cutoff) { return Element(module, cutoff); }
    static Element basis(ModulePtr module, LabelId id, const Rat& cutoff);

    const ModulePtr& module() const { return module_; }
    const Rat& cutoff() const { return cutoff_; }
    const std::map<LabelId, Nov>& terms() const { return coeffs_; }

    void add_term(LabelId id, const Nov& c);
    void set_term(LabelId id, const Nov& c);
    Nov coeff(LabelId id) const;

    bool is_zero() const { return coeffs_.empty(); }
    bool is_zero_mod(const Rat& energy) const;

    /// Homogeneity flag: true for zero and for single-degree support.
    bool is_homogeneous() const;
    /// Common degree of a homogeneous nonzero element.
    std::optional<int> degree() const;

    /// Minimum valuation over coefficients; nullopt (+∞) for zero.
    std::optional<Rat> valuation() const;
    /// True when every coefficient lies in Λ⁺.
    bool is_plus() const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { a += b; return a; }
    friend Element operator-(Element a, const Element& b) { a -= b; return a; }
    Element scaled(const Nov& c) const;
    Element scaled(const Rat& c) const;

    bool operator==(const Element& o) const;

    Element eval(const std::map<VarId, Rat>& assignment) const;
    Element truncated(const Rat& new_cutoff) const;

    std::string to_string() const;

private:
    ModulePtr module_;
    Rat cutoff_;
    std::map<LabelId, Nov> coeffs_;
};

/// Sparse graded multilinear map A^⊗arity → A, stored entrywise on basis
/// multi-indices. Every entry's output degree must equal the input degree sum
/// plus the map's degree shift; set_entry enforces this.
class MultilinearMap {
public:
    MultilinearMap(ModulePtr module, int arity, int degree_shift, const Rat& cutoff);

    int arity() const { return arity_; }
    int degree_shift() const { return degree_shift_; }
    const Rat& cutoff() const { return cutoff_; }
    const ModulePtr& module() const { return module_; }
    const std::map<std::vector<LabelId>, Element>& entries() const { return entries_; }

    void set_entry(const std::vector<LabelId>& inputs, const Element& output);
    void add_to_entry(const std::vector<LabelId>& inputs, const Element& output);
    /// Entry lookup; zero element when absent.
    Element entry(const std::vector<LabelId>& inputs) const;

    bool is_zero() const { return entries_.empty(); }

    /// Multilinear expansion over stored entries. Arguments must be
    /// homogeneous and match the arity. Scalars commute past inputs without
    /// sign: the scalar ring is even.
    Element apply(const std::vector<Element>& args) const;

    bool operator==(const MultilinearMap& o) const;

private:
    void check_entry_degrees(const std::vector<LabelId>& inputs, const Element& output) const;

    ModulePtr module_;
    int arity_;
    int degree_shift_;
    Rat cutoff_;
    std::map<std::vector<LabelId>, Element> entries_;
};

/// (−1)^{deg(x₁)+···+deg(x_{i−1})+i−1}: the sign attached to inserting an
/// inner operation at 1-based position i of an argument list.
int insertion_sign(const std::vector<int>& degrees, int i);

/// (−1)^{(deg x₀+1)(deg x₁+···+deg x_k+k)}: the sign of one cyclic rotation
/// of a pairing against an arity-k operation.
int rotation_sign(int deg_x0, const std::vector<int>& degrees_rest);

}  // namespace ainov
