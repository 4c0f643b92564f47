#include "ainov/graded.hpp"

#include <algorithm>
#include <sstream>

namespace ainov {

const std::vector<LabelId> GradedModule::empty_{};

GradedModule::GradedModule(std::vector<std::pair<std::string, int>> basis) {
    labels_.reserve(basis.size());
    degrees_.reserve(basis.size());
    for (auto& [label, degree] : basis) {
        if (label.empty()) throw std::invalid_argument("empty basis label");
        if (index_.count(label)) throw std::invalid_argument("duplicate basis label: " + label);
        LabelId id = static_cast<LabelId>(labels_.size());
        index_.emplace(label, id);
        by_degree_[degree].push_back(id);
        labels_.push_back(std::move(label));
        degrees_.push_back(degree);
    }
}

LabelId GradedModule::id(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::invalid_argument("unknown basis label: " + label);
    return it->second;
}

bool GradedModule::has_label(const std::string& label) const { return index_.count(label) != 0; }

const std::vector<LabelId>& GradedModule::labels_of_degree(int degree) const {
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? empty_ : it->second;
}

std::map<int, std::size_t> GradedModule::ranks_by_degree() const {
    std::map<int, std::size_t> out;
    for (const auto& [deg, ids] : by_degree_) out[deg] = ids.size();
    return out;
}

std::vector<int> GradedModule::degrees_present() const {
    std::vector<int> out;
    for (const auto& [deg, ids] : by_degree_)
        if (!ids.empty()) out.push_back(deg);
    return out;
}

// ---------------------------------------------------------------------------

Element::Element(ModulePtr module, const Rat& cutoff) : module_(std::move(module)), cutoff_(cutoff) {
    if (!module_) throw std::invalid_argument("element requires a module");
}

Element Element::basis(ModulePtr module, LabelId id, const Rat& cutoff) {
    Element e(std::move(module), cutoff);
    e.set_term(id, Nov::constant(Rat(1), cutoff));
    return e;
}

void Element::add_term(LabelId id, const Nov& c) {
    if (c.cutoff() != cutoff_) throw CutoffMismatch("element/scalar cutoff mismatch");
    if (id >= module_->rank()) throw std::out_of_range("basis label id out of range");
    auto it = coeffs_.find(id);
    if (it == coeffs_.end()) {
        if (!c.is_zero()) coeffs_.emplace(id, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void Element::set_term(LabelId id, const Nov& c) {
    if (c.cutoff() != cutoff_) throw CutoffMismatch("element/scalar cutoff mismatch");
    if (id >= module_->rank()) throw std::out_of_range("basis label id out of range");
    if (c.is_zero())
        coeffs_.erase(id);
    else
        coeffs_.insert_or_assign(id, c);
}

Nov Element::coeff(LabelId id) const {
    auto it = coeffs_.find(id);
    return it == coeffs_.end() ? Nov::zero(cutoff_) : it->second;
}

bool Element::is_zero_mod(const Rat& energy) const {
    for (const auto& [id, c] : coeffs_)
        if (!c.is_zero_mod(energy)) return false;
    return true;
}

bool Element::is_homogeneous() const {
    std::optional<int> d;
    for (const auto& [id, c] : coeffs_) {
        int deg = module_->degree(id);
        if (d && *d != deg) return false;
        d = deg;
    }
    return true;
}

std::optional<int> Element::degree() const {
    if (coeffs_.empty() || !is_homogeneous()) return std::nullopt;
    return module_->degree(coeffs_.begin()->first);
}

std::optional<Rat> Element::valuation() const {
    std::optional<Rat> v;
    for (const auto& [id, c] : coeffs_) {
        auto cv = c.valuation();
        if (cv && (!v || *cv < *v)) v = cv;
    }
    return v;
}

bool Element::is_plus() const {
    for (const auto& [id, c] : coeffs_)
        if (!c.is_plus()) return false;
    return true;
}

Element Element::operator-() const {
    Element out(module_, cutoff_);
    for (const auto& [id, c] : coeffs_) out.coeffs_.emplace(id, -c);
    return out;
}

Element& Element::operator+=(const Element& o) {
    if (!(*module_ == *o.module_)) throw std::invalid_argument("element module mismatch");
    for (const auto& [id, c] : o.coeffs_) add_term(id, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (!(*module_ == *o.module_)) throw std::invalid_argument("element module mismatch");
    for (const auto& [id, c] : o.coeffs_) add_term(id, -c);
    return *this;
}

Element Element::scaled(const Nov& c) const {
    Element out(module_, cutoff_);
    for (const auto& [id, v] : coeffs_) {
        Nov prod = v * c;
        if (!prod.is_zero()) out.coeffs_.emplace(id, std::move(prod));
    }
    return out;
}

Element Element::scaled(const Rat& c) const {
    Element out(module_, cutoff_);
    if (c == 0) return out;
    for (const auto& [id, v] : coeffs_) {
        Nov prod = v;
        prod *= c;
        out.coeffs_.emplace(id, std::move(prod));
    }
    return out;
}

bool Element::operator==(const Element& o) const {
    return *module_ == *o.module_ && cutoff_ == o.cutoff_ && coeffs_ == o.coeffs_;
}

Element Element::eval(const std::map<VarId, Rat>& assignment) const {
    Element out(module_, cutoff_);
    for (const auto& [id, c] : coeffs_) {
        Nov v = c.eval(assignment);
        if (!v.is_zero()) out.coeffs_.emplace(id, std::move(v));
    }
    return out;
}

Element Element::truncated(const Rat& new_cutoff) const {
    Element out(module_, new_cutoff);
    for (const auto& [id, c] : coeffs_) {
        Nov v = c.truncated(new_cutoff);
        if (!v.is_zero()) out.coeffs_.emplace(id, std::move(v));
    }
    return out;
}

std::string Element::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << module_->label(id);
    }
    return os.str();
}

// ---------------------------------------------------------------------------

MultilinearMap::MultilinearMap(ModulePtr module, int arity, int degree_shift, const Rat& cutoff)
    : module_(std::move(module)), arity_(arity), degree_shift_(degree_shift), cutoff_(cutoff) {
    if (!module_) throw std::invalid_argument("multilinear map requires a module");
    if (arity < 0) throw std::invalid_argument("negative arity");
}

void MultilinearMap::check_entry_degrees(const std::vector<LabelId>& inputs,
                                         const Element& output) const {
    if (static_cast<int>(inputs.size()) != arity_)
        throw std::invalid_argument("entry multi-index length does not match arity");
    int in_degree = degree_shift_;
    for (LabelId id : inputs) in_degree += module_->degree(id);
    for (const auto& [id, c] : output.terms()) {
        if (module_->degree(id) != in_degree)
            throw std::invalid_argument("degree bookkeeping violation: output " + module_->label(id) +
                                        " has degree " + std::to_string(module_->degree(id)) +
                                        ", expected " + std::to_string(in_degree));
    }
}

void MultilinearMap::set_entry(const std::vector<LabelId>& inputs, const Element& output) {
    check_entry_degrees(inputs, output);
    if (output.cutoff() != cutoff_) throw CutoffMismatch("entry cutoff mismatch");
    if (output.is_zero())
        entries_.erase(inputs);
    else
        entries_.insert_or_assign(inputs, output);
}

void MultilinearMap::add_to_entry(const std::vector<LabelId>& inputs, const Element& output) {
    Element e = entry(inputs);
    e += output;
    set_entry(inputs, e);
}

Element MultilinearMap::entry(const std::vector<LabelId>& inputs) const {
    auto it = entries_.find(inputs);
    return it == entries_.end() ? Element::zero(module_, cutoff_) : it->second;
}

Element MultilinearMap::apply(const std::vector<Element>& args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw std::invalid_argument("arity mismatch: expected " + std::to_string(arity_) +
                                    " arguments, got " + std::to_string(args.size()));
    for (const auto& a : args) {
        if (!(*a.module() == *module_)) throw std::invalid_argument("argument module mismatch");
        if (!a.is_homogeneous()) throw std::invalid_argument("argument is not homogeneous");
    }

    Element result(module_, cutoff_);
    if (arity_ == 0) {
        auto it = entries_.find({});
        return it == entries_.end() ? result : it->second;
    }
    for (const auto& a : args)
        if (a.is_zero()) return result;

    // Odometer over the sparse supports of the arguments.
    std::vector<std::vector<std::pair<LabelId, const Nov*>>> supports(args.size());
    for (std::size_t i = 0; i < args.size(); ++i)
        for (const auto& [id, c] : args[i].terms()) supports[i].emplace_back(id, &c);

    std::vector<std::size_t> idx(args.size(), 0);
    std::vector<LabelId> tuple(args.size());
    while (true) {
        Nov scale = Nov::constant(Rat(1), cutoff_);
        for (std::size_t i = 0; i < args.size(); ++i) {
            tuple[i] = supports[i][idx[i]].first;
            scale = scale * *supports[i][idx[i]].second;
        }
        if (!scale.is_zero()) {
            auto it = entries_.find(tuple);
            if (it != entries_.end()) result += it->second.scaled(scale);
        }
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == supports[pos].size()) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) break;
    }
    return result;
}

bool MultilinearMap::operator==(const MultilinearMap& o) const {
    return *module_ == *o.module_ && arity_ == o.arity_ && degree_shift_ == o.degree_shift_ &&
           cutoff_ == o.cutoff_ && entries_ == o.entries_;
}

// ---------------------------------------------------------------------------

namespace {
int parity_sign(long exponent) { return ((exponent % 2) + 2) % 2 == 0 ? 1 : -1; }
}  // namespace

int insertion_sign(const std::vector<int>& degrees, int i) {
    if (i < 1 || i > static_cast<int>(degrees.size()) + 1)
        throw std::out_of_range("insertion position out of range");
    long exponent = i - 1;
    for (int j = 0; j < i - 1; ++j) exponent += degrees[j];
    return parity_sign(exponent);
}

int rotation_sign(int deg_x0, const std::vector<int>& degrees_rest) {
    long sum = static_cast<long>(degrees_rest.size());
    for (int d : degrees_rest) sum += d;
    return parity_sign(static_cast<long>(deg_x0 + 1) * sum);
}

}  // namespace ainov
