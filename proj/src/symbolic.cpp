#include "syntomic/symbolic.hpp"

#include <algorithm>
#include <sstream>

namespace syntomic {

SymbolicSeries& SymbolicSeries::set(std::size_t index, SymbolicScalar c)
{
    if (tail_from && index >= *tail_from) throw Error("explicit term inside the unknown tail");
    auto it = std::lower_bound(terms.begin(), terms.end(), index,
                               [](const auto& t, std::size_t i) { return t.first < i; });
    if (it != terms.end() && it->first == index)
        it->second = c;
    else
        terms.insert(it, {index, c});
    return *this;
}

SymbolicSeries SymbolicSeries::truncated(std::size_t bound) const
{
    SymbolicSeries r;
    for (const auto& t : terms)
        if (t.first < bound) r.terms.push_back(t);
    if (tail_from && *tail_from < bound) r.tail_from = tail_from;
    return r;
}

const SymbolicScalar* SymbolicSeries::at(std::size_t index) const
{
    for (const auto& t : terms)
        if (t.first == index) return &t.second;
    return nullptr;
}

std::optional<std::pair<std::size_t, SymbolicScalar>> SymbolicSeries::leading_term() const
{
    for (const auto& t : terms) {
        if (t.second.is_known_zero()) continue;
        if (t.second.kind == ScalarKind::Unknown) return std::nullopt;
        return t;
    }
    return std::nullopt;
}

bool SymbolicSeries::is_zero() const
{
    return !tail_from && std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.is_known_zero(); });
}

bool SymbolicSeries::fully_known() const
{
    return !tail_from && std::all_of(terms.begin(), terms.end(),
                                     [](const auto& t) { return t.second.kind == ScalarKind::Known; });
}

VarId VarRegistry::fresh(VarKind kind)
{
    kinds_.push_back(kind);
    declared_.push_back(true);
    return static_cast<VarId>(kinds_.size() - 1);
}

void VarRegistry::declare(VarId id, VarKind kind)
{
    if (id >= kinds_.size()) {
        kinds_.resize(id + 1, VarKind::Free);
        declared_.resize(id + 1, false);
    }
    if (declared_[id] && kinds_[id] != kind) throw Error("unknown id declared with two kinds");
    kinds_[id] = kind;
    declared_[id] = true;
}

VarKind VarRegistry::kind(VarId id) const
{
    if (!contains(id)) throw Error("undeclared unknown id " + std::to_string(id));
    return kinds_[id];
}

Poly Poly::constant(std::uint32_t c, std::uint32_t p)
{
    Poly r;
    r.p_ = p;
    if (c % p) r.terms_[{}] = c % p;
    return r;
}

Poly Poly::var(VarId id, std::uint32_t p)
{
    Poly r;
    r.p_ = p;
    r.terms_[{{id, 1}}] = 1;
    return r;
}

Poly Poly::from_scalar(const SymbolicScalar& s, std::uint32_t p)
{
    return s.kind == ScalarKind::Known ? constant(s.value, p) : var(s.id, p);
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::uint32_t Poly::constant_value() const
{
    auto it = terms_.find({});
    return it == terms_.end() ? 0 : it->second;
}

bool Poly::certified_nonzero(const VarRegistry& reg) const
{
    if (terms_.size() != 1) return false;
    for (auto [id, e] : terms_.begin()->first)
        if (reg.kind(id) != VarKind::Unit) return false;
    return true;
}

Poly Poly::inverse_monomial(std::uint32_t p) const
{
    if (terms_.size() != 1) throw Error("inverse of a non-monomial");
    auto key = terms_.begin()->first;
    auto c = terms_.begin()->second;
    for (auto& [id, e] : key) e = -e;
    Poly r;
    r.p_ = p;
    r.terms_[key] = inverse_mod(c, p);
    return r;
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r = *this;
    if (terms_.empty()) r.p_ = o.p_;
    for (const auto& [k, c] : o.terms_) {
        auto& slot = r.terms_[k];
        slot = (slot + c) % r.p_;
        if (slot == 0) r.terms_.erase(k);
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    Poly neg = o;
    for (auto& [k, c] : neg.terms_) c = (o.p_ - c) % o.p_;
    return *this + neg;
}

Poly Poly::operator*(const Poly& o) const
{
    Poly r;
    r.p_ = terms_.empty() ? o.p_ : p_;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Key k;
            std::size_t i = 0, j = 0;
            while (i < ka.size() || j < kb.size()) {
                if (j == kb.size() || (i < ka.size() && ka[i].first < kb[j].first))
                    k.push_back(ka[i++]);
                else if (i == ka.size() || kb[j].first < ka[i].first)
                    k.push_back(kb[j++]);
                else {
                    auto e = ka[i].second + kb[j].second;
                    if (e != 0) k.push_back({ka[i].first, e});
                    ++i, ++j;
                }
            }
            auto& slot = r.terms_[k];
            slot = static_cast<std::uint32_t>((slot + std::uint64_t(ca) * cb) % r.p_);
            if (slot == 0) r.terms_.erase(k);
        }
    return r;
}

std::uint32_t Poly::evaluate(const std::vector<std::uint32_t>& values, std::uint32_t p) const
{
    std::uint64_t total = 0;
    for (const auto& [k, c] : terms_) {
        std::uint64_t t = c;
        for (auto [id, e] : k) {
            std::uint32_t v = values.at(id) % p;
            if (e < 0) v = inverse_mod(v, p);
            for (std::int32_t r = 0; r < std::abs(e); ++r) t = t * v % p;
        }
        total = (total + t) % p;
    }
    return static_cast<std::uint32_t>(total);
}

std::string Poly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (auto [id, e] : k) {
            os << "*x" << id;
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

}  // namespace syntomic
