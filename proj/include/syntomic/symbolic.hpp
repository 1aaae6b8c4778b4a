#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syntomic/arith.hpp"

namespace syntomic {

using VarId = std::uint32_t;

enum class ScalarKind { Known, UnitUnknown, Unknown };

/// A matrix coefficient: a residue mod p, a provably nonzero unknown, or
/// an unconstrained unknown.
struct SymbolicScalar {
    ScalarKind kind = ScalarKind::Known;
    std::uint32_t value = 0;  // Known only
    VarId id = 0;             // unknowns only

    static SymbolicScalar known(std::uint32_t v) { return {ScalarKind::Known, v, 0}; }
    static SymbolicScalar unit(VarId id) { return {ScalarKind::UnitUnknown, 0, id}; }
    static SymbolicScalar unknown(VarId id) { return {ScalarKind::Unknown, 0, id}; }

    bool is_known_zero() const { return kind == ScalarKind::Known && value == 0; }
    bool certified_nonzero() const { return kind == ScalarKind::UnitUnknown || (kind == ScalarKind::Known && value != 0); }
    bool operator==(const SymbolicScalar&) const = default;
};

/// A column of a filtered map: explicit coefficients at target basis indices,
/// plus an optional tail of independent unknowns at every index >= tail_from.
/// Target bases are ordered by F-degree, so index order is filtration order.
struct SymbolicSeries {
    std::vector<std::pair<std::size_t, SymbolicScalar>> terms;  // strictly increasing index
    std::optional<std::size_t> tail_from;

    /// Adds (or overwrites) the coefficient at `index`; indices at or beyond
    /// the tail are rejected.
    SymbolicSeries& set(std::size_t index, SymbolicScalar c);
    /// Drops explicit terms with index >= bound and clamps the tail.
    SymbolicSeries truncated(std::size_t bound) const;

    const SymbolicScalar* at(std::size_t index) const;

    /// Lowest term that is not Known(0), unless an Unknown (or the tail) comes first.
    std::optional<std::pair<std::size_t, SymbolicScalar>> leading_term() const;

    bool is_zero() const;
    bool fully_known() const;
};

enum class VarKind { Unit, Free };

/// Kinds of all unknown ids in play; fresh ids are handed out for tails.
class VarRegistry {
public:
    VarId fresh(VarKind kind);
    void declare(VarId id, VarKind kind);
    VarKind kind(VarId id) const;
    std::size_t size() const { return kinds_.size(); }
    bool contains(VarId id) const { return id < kinds_.size() && declared_[id]; }

private:
    std::vector<VarKind> kinds_;
    std::vector<bool> declared_;
};

/// Laurent polynomial over F_p in the registry's variables. Only Unit
/// variables ever receive negative exponents (they come from dividing by
/// certified pivots).
class Poly {
public:
    using Key = std::vector<std::pair<VarId, std::int32_t>>;  // sorted by id, nonzero exponents

    Poly() = default;
    static Poly constant(std::uint32_t c, std::uint32_t p);
    static Poly var(VarId id, std::uint32_t p);
    static Poly from_scalar(const SymbolicScalar& s, std::uint32_t p);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::uint32_t constant_value() const;  // 0 when no constant term
    /// A single term whose variables are all Unit kind: nonzero for every instantiation.
    bool certified_nonzero(const VarRegistry& reg) const;
    /// Inverse of a certified-nonzero single term.
    Poly inverse_monomial(std::uint32_t p) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    bool operator==(const Poly&) const = default;

    std::uint32_t evaluate(const std::vector<std::uint32_t>& values, std::uint32_t p) const;
    std::size_t term_count() const { return terms_.size(); }
    std::string to_string() const;

private:
    std::uint32_t p_ = 2;
    std::map<Key, std::uint32_t> terms_;
};

}  // namespace syntomic
