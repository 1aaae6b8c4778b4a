#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "syntomic/zp_square.hpp"
#include "syntomic/zpn_square.hpp"

namespace syntomic {

/// External theorems the report relies on but never proves. They are
/// reported with every conclusion that touches them and cannot be switched off.
enum class AxiomId { HLS_SURJECTIVITY, HLS_CRYSTALLINITY, LIU_WANG_H2 };

struct AxiomTag {
    AxiomId id;
    std::string statement;
    bool used = false;
};

std::string to_string(AxiomId id);
AxiomTag axiom(AxiomId id, bool used = true);
std::vector<AxiomTag> axiom_catalog();

enum class RowReason { SHARP_RANGE, BEYOND_TORSION };
std::string to_string(RowReason r);

struct KTableRow {
    std::int64_t i = 0;
    bool nonzero = false;
    RowReason reason = RowReason::SHARP_RANGE;
    std::vector<AxiomTag> axioms;
};

struct H2Basis {
    std::vector<NamedClass> classes;  // v1^k ∂λ1, k = 0 .. p^(n-2)-1
    std::vector<AxiomTag> axioms;
    std::int64_t torsion_order = 0;   // p^(n-2)
};

/// Mod p H^2 of Z/p^n, as a list of Z_p classes. Refuses (throws Error)
/// unless `cert` is a verified certificate for the same (p, n).
H2Basis h2_basis(std::uint32_t p, std::uint32_t n, const VanishingCertificate& cert);
H2Basis h2_basis(std::uint32_t p, std::uint32_t n);

/// K_{2i}(Z/p^n) != 0 rows for 0 <= i <= i_max. Throws std::logic_error if
/// the predicate and h2_basis ever disagree.
std::vector<KTableRow> k_even_table(std::uint32_t p, std::uint32_t n, std::int64_t i_max);

struct NilpotenceOrder {
    std::int64_t order = 0;          // [n]_p = (p^n - 1)/(p - 1)
    std::int64_t weight = 0;         // (p-1)[n]_p = p^n - 1
    bool weight_identity = false;    // (p-1)[n]_p == p^n - 1
    bool exceeds_torsion = false;    // [n]_p - 1 >= p^(n-2), vacuous for n = 1
    bool homotopy_valid = false;     // the statement for K and TC needs p >= 5
};

NilpotenceOrder v1_nilpotence_order(std::uint32_t p, std::uint32_t n);

struct BoundComparison {
    /// Least i with i - 1 >= (p/(p-1))^2 (p^n - 1); K_{2i-2} vanishes from there on.
    std::int64_t old_bound_index = 0;
    /// The same bound in K_{2i} indexing: K_{2i} = 0 for i >= this.
    std::int64_t old_bound_k_index = 0;
    /// (p-1) p^(n-2): K_{2i} = 0 for i > this, and K_{2 sharp} != 0.
    std::int64_t sharp_bound = 0;
};

BoundComparison bound_comparison(std::uint32_t p, std::uint32_t n);

enum class OutputFormat { Json, Csv, Markdown };
OutputFormat parse_format(const std::string& s);

nlohmann::json ktable_to_json(std::uint32_t p, std::uint32_t n, const std::vector<KTableRow>& rows,
                              const VanishingCertificate& cert);
std::string render_ktable(std::uint32_t p, std::uint32_t n, std::int64_t i_max, OutputFormat fmt);

}  // namespace syntomic
