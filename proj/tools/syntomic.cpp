#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "syntomic/certificate.hpp"
#include "syntomic/ktheory.hpp"
#include "syntomic/verifier.hpp"
#include "syntomic/zp_square.hpp"
#include "syntomic/zpn_square.hpp"

using namespace syntomic;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kUnverified = 2;

constexpr const char* kOutDirEnv = "SYNTOMIC_OUT_DIR";

struct RunConfig {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::string weights;
    std::int64_t i_max = -1;
    std::string format;
    std::string output;
    std::uint64_t seed = 1;
    int samples = 100;
    bool mod_v1 = false;
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s)
{
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw Error("weight range must look like a..b");
    std::size_t used_a = 0, used_b = 0;
    std::int64_t a = 0, b = 0;
    try {
        a = std::stoll(s.substr(0, dots), &used_a);
        b = std::stoll(s.substr(dots + 2), &used_b);
    } catch (const std::exception&) {
        throw Error("weight range must look like a..b");
    }
    if (used_a != dots || used_b != s.size() - dots - 2) throw Error("weight range must look like a..b");
    if (a < 0 || b < a) throw Error("weight range " + s + " is empty or negative");
    return {a, b};
}

std::string extension(OutputFormat f)
{
    return f == OutputFormat::Json ? "json" : f == OutputFormat::Csv ? "csv" : "md";
}

// Explicit --output wins; otherwise a file in $SYNTOMIC_OUT_DIR; otherwise stdout.
void emit(const std::string& text, const RunConfig& cfg, const std::string& stem, OutputFormat fmt)
{
    fs::path path;
    if (!cfg.output.empty()) {
        path = cfg.output;
    } else if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) {
        path = fs::path(dir) / (stem + "." + extension(fmt));
    } else {
        std::cout << text;
        return;
    }
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
}

std::string names(const std::vector<NamedClass>& classes, int degree, const char* sep)
{
    std::string s;
    for (const auto& c : classes)
        if (c.cohom_degree == degree) s += (s.empty() ? "" : sep) + c.name;
    return s;
}

int cmd_zp(const RunConfig& cfg)
{
    const auto fmt = parse_format(cfg.format);
    const auto [lo, hi] = parse_range(cfg.weights);
    PrimeContext::base(cfg.p);  // validates p

    struct Row {
        std::int64_t i;
        bool certified = false;
        CohomologyDims dims;
        std::vector<NamedClass> classes;
        int samples_passed = 0;
        std::string note;
    };
    std::vector<Row> rows;
    std::mt19937_64 rng(cfg.seed);
    bool all_ok = true;
    for (std::int64_t i = lo; i <= hi; ++i) {
        Row r;
        r.i = i;
        try {
            const auto zc = cfg.mod_v1 ? mod_v1_cohomology(cfg.p, i) : zp_cohomology(cfg.p, i);
            r.certified = true;
            r.dims = zc.report.dims;
            r.classes = zc.classes;
            const auto sq = cfg.mod_v1 ? mod_v1_square(cfg.p, i) : build_zp_square(cfg.p, i);
            const auto comp = compute_cohomology(sq);
            for (int s = 0; s < cfg.samples; ++s) r.samples_passed += sampled_dims(comp.complex, cfg.p, rng) == r.dims;
            if (r.samples_passed != cfg.samples) {
                r.certified = false;
                r.note = "sampling disagrees with the certified dimensions";
            }
        } catch (const Indeterminate& e) {
            r.note = e.what();
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const Error*>(&e)) throw;
            r.note = e.what();
        }
        all_ok = all_ok && r.certified;
        rows.push_back(std::move(r));
    }

    std::ostringstream os;
    const char* status[] = {"INDETERMINATE", "CERTIFIED"};
    if (fmt == OutputFormat::Json) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row = {{"i", r.i}, {"status", status[r.certified]}, {"samples_passed", r.samples_passed}};
            if (r.certified) {
                row["dims"] = {r.dims.h0, r.dims.h1, r.dims.h2};
                nlohmann::json gens;
                for (int d = 0; d <= 2; ++d) {
                    nlohmann::json g = nlohmann::json::array();
                    for (const auto& c : r.classes)
                        if (c.cohom_degree == d) g.push_back(c.name);
                    gens["H" + std::to_string(d)] = g;
                }
                row["generators"] = gens;
            }
            if (!r.note.empty()) row["note"] = r.note;
            jr.push_back(row);
        }
        nlohmann::json out = {{"p", cfg.p}, {"mod_v1", cfg.mod_v1}, {"seed", cfg.seed}, {"samples", cfg.samples}, {"rows", jr}};
        os << out.dump(2) << '\n';
    } else if (fmt == OutputFormat::Csv) {
        os << "i,h0,h1,h2,status,H0,H1,H2\n";
        for (const auto& r : rows)
            os << r.i << ',' << r.dims.h0 << ',' << r.dims.h1 << ',' << r.dims.h2 << ',' << status[r.certified] << ','
               << names(r.classes, 0, ";") << ',' << names(r.classes, 1, ";") << ',' << names(r.classes, 2, ";") << '\n';
    } else {
        os << "# F_p(i)(Z_" << cfg.p << ")" << (cfg.mod_v1 ? "/v1" : "") << "\n\n";
        os << "| i | h0 | h1 | h2 | H0 | H1 | H2 | status |\n|---|---|---|---|---|---|---|---|\n";
        for (const auto& r : rows)
            os << "| " << r.i << " | " << r.dims.h0 << " | " << r.dims.h1 << " | " << r.dims.h2 << " | "
               << names(r.classes, 0, ", ") << " | " << names(r.classes, 1, ", ") << " | " << names(r.classes, 2, ", ")
               << " | " << status[r.certified] << " |\n";
    }
    emit(os.str(), cfg, "zp_p" + std::to_string(cfg.p) + (cfg.mod_v1 ? "_modv1" : ""), fmt);
    return all_ok ? kOk : kUnverified;
}

int cmd_certify(const RunConfig& cfg)
{
    const auto fmt = parse_format(cfg.format);
    if (cfg.n < 2) throw Error("certify needs n >= 2");
    PrimeContext::quotient(cfg.p, cfg.n);

    const auto cert = certify_vanishing(cfg.p, cfg.n);
    auto record = certificate_to_json(cert);
    const auto check = verify_certificate_json(record);
    int passed = 0;
    if (cert.verified) {
        std::mt19937_64 rng(cfg.seed);
        for (int s = 0; s < cfg.samples; ++s) passed += sample_chain_membership(cert, rng);
    }
    const bool ok = cert.verified && check.ok && passed == cfg.samples;

    std::ostringstream os;
    if (fmt == OutputFormat::Json) {
        record["independent_check"] = {{"ok", check.ok}, {"failures", check.failures}};
        record["sampling"] = {{"seed", cfg.seed}, {"samples", cfg.samples}, {"passed", passed}};
        os << record.dump(2) << '\n';
    } else if (fmt == OutputFormat::Csv) {
        os << "j,element,can_image,phi_image,can_degree,phi_degree\n";
        for (const auto& w : cert.steps)
            os << w.j << ',' << w.element.to_string() << ',' << w.can_image.to_string() << ",lambda_" << w.lambda_index
               << '*' << w.phi_image.to_string() << ',' << w.can_degree.value << ',' << w.phi_degree.value << '\n';
    } else {
        os << "# v1^" << ipow(cfg.p, cfg.n - 2) << " ∂λ1 = 0 over Z/" << cfg.p << "^" << cfg.n << "\n\n";
        os << "weight " << cert.weight << ", truncation F^(>=" << cert.truncation.value << "), target "
           << cert.target.to_string() << " = " << cert.target_rewritten.to_string() << "\n\n";
        os << "| j | element | can | phi | F-degree of phi |\n|---|---|---|---|---|\n";
        for (const auto& w : cert.steps)
            os << "| " << w.j << " | " << w.element.to_string() << " | " << w.can_image.to_string() << " | lambda_"
               << w.lambda_index << "*" << w.phi_image.to_string() << " | " << w.phi_degree.value << " |\n";
        os << "\nverified: " << (cert.verified ? "yes" : "no (" + cert.failure + ")")
           << "\nindependent check: " << (check.ok ? "yes" : "no") << "\nsamples: " << passed << "/" << cfg.samples
           << " (seed " << cfg.seed << ")\n";
    }
    emit(os.str(), cfg, "certificate_p" + std::to_string(cfg.p) + "_n" + std::to_string(cfg.n), fmt);
    if (!ok) {
        std::cerr << "certificate not verified";
        if (!cert.failure.empty()) std::cerr << ": " << cert.failure;
        for (const auto& f : check.failures) std::cerr << "\n  " << f;
        std::cerr << '\n';
    }
    return ok ? kOk : kUnverified;
}

int cmd_ktable(const RunConfig& cfg)
{
    const auto fmt = parse_format(cfg.format);
    if (cfg.n < 2) throw Error("ktable needs n >= 2");
    PrimeContext::quotient(cfg.p, cfg.n);
    const std::int64_t i_max = cfg.i_max >= 0 ? cfg.i_max : 2 * (cfg.p - 1) * ipow(cfg.p, cfg.n - 2);
    const auto cert = certify_vanishing(cfg.p, cfg.n);
    if (!cert.verified || !verify_certificate_json(certificate_to_json(cert)).ok) {
        std::cerr << "vanishing certificate not verified\n";
        return kUnverified;
    }
    emit(render_ktable(cfg.p, cfg.n, i_max, fmt), cfg,
         "ktable_p" + std::to_string(cfg.p) + "_n" + std::to_string(cfg.n), fmt);
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mod p syntomic cohomology of Z_p and Z/p^n, vanishing certificates and K-theory tables"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string zp_format = "md", certify_format = "json", ktable_format = "md";
    auto add_common = [&](CLI::App* sub, std::string& format) {
        sub->add_option("--p", cfg.p, "Prime p")->required();
        sub->add_option("--format", format, "Output format: json, csv or md")
            ->check(CLI::IsMember({"json", "csv", "md"}))
            ->capture_default_str();
        sub->add_option("-o,--output", cfg.output,
                        std::string("Output file (default: stdout, or a file in $") + kOutDirEnv + ")");
        sub->add_option("--seed", cfg.seed, "Seed for randomized soundness sampling")->capture_default_str();
        sub->add_option("--samples", cfg.samples, "Random instantiations per check")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
    };

    auto* zp = app.add_subcommand("zp", "Cohomology of F_p(i)(Z_p) with named generators");
    add_common(zp, zp_format);
    zp->add_option("--weights", cfg.weights, "Inclusive weight range a..b")->required();
    zp->add_flag("--mod-v1", cfg.mod_v1, "Use the square of F_p(*)(Z_p)/v1");

    auto* certify = app.add_subcommand("certify", "Certify v1^(p^(n-2)) ∂λ1 = 0 over Z/p^n");
    add_common(certify, certify_format);
    certify->add_option("--n", cfg.n, "Exponent n of Z/p^n")->required();

    auto* ktable = app.add_subcommand("ktable", "Table of nonvanishing K_2i(Z/p^n)");
    add_common(ktable, ktable_format);
    ktable->add_option("--n", cfg.n, "Exponent n of Z/p^n")->required();
    ktable->add_option("--imax", cfg.i_max, "Largest i (default 2(p-1)p^(n-2))");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (zp->parsed()) {
            cfg.format = zp_format;
            return cmd_zp(cfg);
        }
        if (certify->parsed()) {
            cfg.format = certify_format;
            return cmd_certify(cfg);
        }
        cfg.format = ktable_format;
        return cmd_ktable(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Indeterminate& e) {
        std::cerr << "indeterminate: " << e.what() << '\n';
        return kUnverified;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kUnverified;
    }
}
