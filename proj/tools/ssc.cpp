// Command-line front end: construct, verify, bound, and compare intersecting
// subspace codes in Schubert varieties of a Grassmannian.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssc/bounds.hpp"
#include "ssc/code_io.hpp"
#include "ssc/common.hpp"
#include "ssc/constructions.hpp"
#include "ssc/fields.hpp"
#include "ssc/linear_sets.hpp"
#include "ssc/multilevel.hpp"
#include "ssc/schubert.hpp"
#include "ssc/subspace_code.hpp"

namespace {

using ssc::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidCode = 1;
constexpr int kExitUsage = 2;

ordered_json report_json(const ssc::VerificationReport& rep) {
    ordered_json j;
    j["valid"] = rep.valid;
    j["size"] = rep.size;
    j["minDistance"] = rep.minDistance;
    j["worstPairIntersectionDim"] = rep.worstPairIntersectionDim;
    j["perCodewordUIntersectionDims"] = rep.perCodewordUIntersectionDims;
    ordered_json bounds = ordered_json::object();
    for (const auto& b : rep.boundComparisons) {
        ordered_json row;
        row["value"] = b.value;
        row["kind"] = b.isUpper ? "upper" : "lower";
        row["met"] = b.met;
        row["conjectural"] = b.conjectural;
        bounds[b.name] = std::move(row);
    }
    j["boundComparisons"] = std::move(bounds);
    return j;
}

void print_report(const ssc::VerificationReport& rep, std::ostream& os) {
    os << "valid:                 " << (rep.valid ? "yes" : "no") << "\n";
    os << "size:                  " << rep.size << "\n";
    os << "min distance:          " << rep.minDistance << "\n";
    os << "worst pair dim:        " << rep.worstPairIntersectionDim << "\n";
    os << "U-intersection dims:   ";
    for (std::size_t i = 0; i < rep.perCodewordUIntersectionDims.size(); ++i)
        os << (i ? "," : "") << rep.perCodewordUIntersectionDims[i];
    os << "\n";
    for (const auto& b : rep.boundComparisons) {
        os << "bound " << b.name << (b.isUpper ? " (upper" : " (lower") << "): " << b.value
           << (b.met ? "  met" : "  UNMET") << (b.conjectural ? "  [conjectural]" : "") << "\n";
    }
}

struct ConstructArgs {
    std::string kind;
    uint32_t q = 2, k = 2, r = 2;
    uint32_t u = 0, l = 1, t = 0;
    std::uint64_t seed = 0;
    std::string family = "gabidulin";
    std::string system_file;
    std::string out_file;
    bool json = false;
};

int run_construct(const ConstructArgs& a) {
    ssc::FieldCtx field = ssc::make_field(a.q, a.k);
    ssc::SubspaceCode code(a.q, a.k, a.r * a.k);
    ssc::Subspace U = ssc::standard_flag_space(1, a.r * a.k, a.q);  // placeholder
    uint32_t ver_l = 1, ver_t = 0;
    ordered_json meta;
    meta["construction"] = a.kind;

    if (a.kind == "norm1") {
        ssc::ConstructionResult res = ssc::norm_one_code(field, a.r);
        code = std::move(res.code);
        U = std::move(res.U);
        meta["params"] = {{"q", a.q}, {"k", a.k}, {"r", a.r}};
    } else if (a.kind == "scattered") {
        std::optional<ssc::QSystem> sys;
        if (!a.system_file.empty()) {
            sys = ssc::load_q_system(a.system_file, field);
            meta["system"] = ssc::to_json(*sys);
        } else if (a.family == "gabidulin") {
            sys = ssc::gabidulin_system(field, a.r);
            meta["family"] = "gabidulin";
        } else if (a.family == "uprime") {
            sys = ssc::replicated_system(field, a.r);
            meta["family"] = "uprime";
        } else {
            std::cerr << "unknown family: " << a.family << "\n";
            return kExitUsage;
        }
        ssc::ConstructionResult res = ssc::scattered_code(*sys);
        if (!res.warning.empty()) std::cerr << "warning: " << res.warning << "\n";
        code = std::move(res.code);
        U = std::move(res.U);
        meta["params"] = {{"q", a.q}, {"k", a.k}, {"r", a.r}, {"u", sys->u()}};
    } else if (a.kind == "multilevel") {
        const uint32_t u = a.u ? a.u : a.k;
        code = ssc::multilevel_assemble(a.k, a.r, u, a.l, a.t, field, a.seed);
        U = ssc::standard_flag_space(u, a.r * a.k, a.q);
        ver_l = a.l;
        ver_t = a.t;
        meta["params"] = {{"q", a.q}, {"k", a.k}, {"r", a.r}, {"u", u},
                          {"l", a.l}, {"t", a.t}, {"seed", a.seed}};
    } else {
        std::cerr << "unknown construction: " << a.kind << "\n";
        return kExitUsage;
    }

    ssc::VerificationReport rep = ssc::verify_intersecting(code, U, ver_l, ver_t);
    ssc::CodeFile file(field, code);
    file.meta = std::move(meta);
    file.uSpace = U;
    if (!a.out_file.empty()) ssc::save_code_file(file, a.out_file);

    if (a.json) {
        ordered_json j;
        j["construction"] = a.kind;
        j["report"] = report_json(rep);
        if (!a.out_file.empty())
            j["outFile"] = a.out_file;
        else
            j["codeFile"] = ssc::to_json(file);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "constructed " << a.kind << ": " << code.size() << " codeword(s) in Gr_"
                  << code.dim() << "(F_" << a.q << "^" << code.ambient() << ")\n";
        print_report(rep, std::cout);
        if (!a.out_file.empty()) std::cout << "written: " << a.out_file << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string file;
    std::string u_file;
    uint32_t standard_u = 0;
    uint32_t l = 1, t = 0;
    bool json = false;
};

int run_verify(const VerifyArgs& a) {
    ssc::CodeFile file = ssc::load_code_file(a.file);
    if (file.duplicatesDropped > 0)
        std::cerr << "warning: " << file.duplicatesDropped << " duplicate codeword(s) dropped\n";

    std::optional<ssc::Subspace> U;
    if (!a.u_file.empty()) {
        std::ifstream in(a.u_file, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open: " + a.u_file);
        ordered_json j;
        try {
            j = ordered_json::parse(in);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("u-file parse error: ") + e.what());
        }
        const ordered_json& rows = j.is_object() && j.contains("uSpace") ? j.at("uSpace") : j;
        U = ssc::detail::subspace_from_json(rows, file.field.q(), file.ambient, "uSpace");
    } else if (a.standard_u > 0) {
        U = ssc::standard_flag_space(a.standard_u, file.ambient, file.field.q());
    } else if (file.uSpace) {
        U = file.uSpace;
    } else {
        std::cerr << "no reference subspace: give --u-file or --standard-u, or a file with uSpace\n";
        return kExitUsage;
    }

    ssc::VerificationReport rep = ssc::verify_intersecting(file.code, *U, a.l, a.t);
    if (a.json)
        std::cout << report_json(rep).dump(2) << "\n";
    else
        print_report(rep, std::cout);
    return rep.valid ? kExitOk : kExitInvalidCode;
}

struct BoundsArgs {
    uint32_t q = 2, k = 2, r = 2, u = 2, l = 1, t = 0;
    bool json = false;
};

int run_bounds(const BoundsArgs& a) {
    const uint32_t n = a.r * a.k;
    ordered_json j = ordered_json::object();
    std::vector<std::string> lines;

    if (a.l == 1 && a.t == 0 && a.u >= 1 && a.u < n) {
        const std::uint64_t v = ssc::upper_bound_basic(a.k, a.r, a.u, a.q);
        j["upper_basic"] = v;
        lines.push_back("upper_basic (upper):        " + std::to_string(v));
    }
    if (auto v = ssc::upper_bound_general(a.u, a.l, a.t, a.q)) {
        j["upper_general"] = *v;
        lines.push_back("upper_general (upper):      " + std::to_string(*v));
    } else {
        j["upper_general"] = nullptr;
        lines.push_back("upper_general (upper):      n/a (needs t < l)");
    }
    try {
        const ssc::ExponentLowerBound lb = ssc::lower_bound_multilevel(a.k, a.r, a.u, a.l, a.t, a.q);
        j["lower_ferrers"] = {{"exponent", lb.exponent},
                              {"value", lb.value(a.q)},
                              {"conjectural", lb.conjectural}};
        lines.push_back("lower_ferrers (lower):      " + std::to_string(lb.value(a.q)) + " = " +
                        std::to_string(a.q) + "^" + std::to_string(lb.exponent) +
                        "  [conjectural]");
    } catch (const std::exception&) {
        j["lower_ferrers"] = nullptr;
        lines.push_back("lower_ferrers (lower):      n/a (parameter range)");
    }
    if (a.l == 1 && a.t == 0) {
        const std::uint64_t v = ssc::best_multilevel_bound_2k(a.q, a.k, a.r, a.u);
        j["multilevel_cells"] = v;
        lines.push_back("multilevel_cells (upper on multilevel, distance 2k): " +
                        std::to_string(v));
    }

    if (a.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "bounds at q=" << a.q << " k=" << a.k << " r=" << a.r << " u=" << a.u
                  << " l=" << a.l << " t=" << a.t << "\n";
        for (const auto& s : lines) std::cout << s << "\n";
    }
    return kExitOk;
}

struct CompareArgs {
    uint32_t q = 2, k = 3, r = 2;
    uint32_t u = 0, l = 1, t = 0;
    std::uint64_t seed = 0;
    bool json = false;
};

int run_compare(const CompareArgs& a) {
    const uint32_t u = a.u ? a.u : a.k;
    ssc::FieldCtx field = ssc::make_field(a.q, a.k);
    const uint32_t n = a.r * a.k;

    ssc::ConstructionResult n1 = ssc::norm_one_code(field, a.r);
    ssc::VerificationReport rep1 = ssc::verify_intersecting(n1.code, n1.U, 1, 0);

    ssc::SubspaceCode ml = ssc::multilevel_assemble(a.k, a.r, u, a.l, a.t, field, a.seed);
    ssc::Subspace Ustd = ssc::standard_flag_space(u, n, a.q);
    ssc::VerificationReport rep2 = ssc::verify_intersecting(ml, Ustd, a.l, a.t);

    const std::uint64_t cells_bound = ssc::best_multilevel_bound_2k(a.q, a.k, a.r, u);
    std::string verdict;
    if (a.l == 1 && a.t == 0 && a.r < u) {
        verdict = (ml.size() < n1.code.size())
                      ? "strict: multilevel stays below the direct construction"
                      : "unexpected: multilevel matched the direct construction";
    } else if (a.l == 1 && a.t == 0) {
        verdict = "no strictness claim (r >= u): both may attain the bound";
    } else {
        verdict = "no verdict for (l,t) != (1,0)";
    }

    if (a.json) {
        ordered_json j;
        j["normOne"] = report_json(rep1);
        j["multilevel"] = report_json(rep2);
        j["multilevelCellsBound"] = cells_bound;
        j["verdict"] = verdict;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "comparison at q=" << a.q << " k=" << a.k << " r=" << a.r << " u=" << u
                  << " l=" << a.l << " t=" << a.t << "\n";
        std::cout << "norm-one code:    size " << rep1.size << ", min distance "
                  << rep1.minDistance << ", valid " << (rep1.valid ? "yes" : "no") << "\n";
        std::cout << "multilevel code:  size " << rep2.size << ", min distance "
                  << rep2.minDistance << ", valid " << (rep2.valid ? "yes" : "no") << "\n";
        std::cout << "multilevel cell bound (distance 2k): " << cells_bound << "\n";
        std::cout << verdict << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intersecting subspace codes in Schubert varieties: construct, verify, bound"};
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand("construct", "build a code and optionally save it");
    construct->add_option("kind", ca.kind, "norm1 | scattered | multilevel")->required();
    construct->add_option("--q", ca.q, "field characteristic (prime)")->required();
    construct->add_option("--k", ca.k, "extension degree / codeword dimension")->required();
    construct->add_option("--r", ca.r, "ambient dimension over the extension field")->required();
    construct->add_option("--u", ca.u, "reference dimension (multilevel; default k)");
    construct->add_option("--l", ca.l, "minimum intersection with U (multilevel)");
    construct->add_option("--t", ca.t, "maximum pairwise intersection (multilevel)");
    construct->add_option("--seed", ca.seed, "seed for randomized greedy fallbacks (default 0)");
    construct->add_option("--family", ca.family, "built-in system: gabidulin | uprime");
    construct->add_option("--system", ca.system_file, "q-system JSON file (scattered)");
    construct->add_option("--out", ca.out_file, "output code file");
    construct->add_flag("--json", ca.json, "structured output");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "check a code file for the (l,t) conditions");
    verify->add_option("file", va.file, "code file")->required();
    verify->add_option("--u-file", va.u_file, "reference subspace JSON (rows)");
    verify->add_option("--standard-u", va.standard_u, "use the last-u-coordinates subspace");
    verify->add_option("--l", va.l, "minimum intersection with U");
    verify->add_option("--t", va.t, "maximum pairwise intersection");
    verify->add_flag("--json", va.json, "structured output");

    BoundsArgs ba;
    CLI::App* bounds = app.add_subcommand("bounds", "print applicable size bounds");
    bounds->add_option("--q", ba.q)->required();
    bounds->add_option("--k", ba.k)->required();
    bounds->add_option("--r", ba.r)->required();
    bounds->add_option("--u", ba.u)->required();
    bounds->add_option("--l", ba.l);
    bounds->add_option("--t", ba.t);
    bounds->add_flag("--json", ba.json, "structured output");

    CompareArgs cpa;
    CLI::App* compare = app.add_subcommand("compare", "direct vs multilevel at one parameter set");
    compare->add_option("--q", cpa.q)->required();
    compare->add_option("--k", cpa.k)->required();
    compare->add_option("--r", cpa.r)->required();
    compare->add_option("--u", cpa.u, "reference dimension (default k)");
    compare->add_option("--l", cpa.l);
    compare->add_option("--t", cpa.t);
    compare->add_option("--seed", cpa.seed);
    compare->add_flag("--json", cpa.json, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(ca);
        if (verify->parsed()) return run_verify(va);
        if (bounds->parsed()) return run_bounds(ba);
        if (compare->parsed()) return run_compare(cpa);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
