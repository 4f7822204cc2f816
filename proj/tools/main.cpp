#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "incidence/cohomology.hpp"
#include "incidence/hanmonsky.hpp"
#include "incidence/lefschetz.hpp"
#include "incidence/oracle.hpp"
#include "incidence/pparts.hpp"
#include "incidence/serialize.hpp"
#include "incidence/symfunc.hpp"
#include "incidence/verify.hpp"

namespace {

using incidence::Int;
using incidence::SymLaurent;
using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

long elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count());
}

std::string table_symlaurent(const SymLaurent& f) {
    std::ostringstream os;
    if (f.is_zero()) {
        os << "0\n";
    } else {
        for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
            os << "  " << it->second << " * m(";
            for (std::size_t k = 0; k < it->first.size(); ++k)
                os << (k ? "," : "") << it->first[k];
            os << ")\n";
        }
    }
    os << "dimension: " << f.dimension() << "\n";
    return os.str();
}

std::string table_split(const incidence::SplitType& s) {
    std::ostringstream os;
    os << "  u   v   twist   mult\n";
    for (const auto& [k, m] : s.summands())
        os << "  " << std::get<0>(k) << "   " << std::get<1>(k) << "   " << std::get<2>(k)
           << "   " << m << "\n";
    os << "rank: " << s.count() << "\n";
    return os.str();
}

std::string table_bichar(const incidence::BiChar& b, const std::string& label) {
    std::ostringstream os;
    os << label << ":";
    if (b.is_zero()) {
        os << " 0\n";
        return os.str();
    }
    os << "\n";
    for (const auto& [k, c] : b.terms())
        os << "  z1^" << k.first << " z2^" << k.second << " : " << c << "\n";
    return os.str();
}

std::string table_hm(const incidence::HMClass& h) {
    std::ostringstream os;
    os << "  c   j   mult\n";
    for (const auto& [k, m] : h.summands)
        os << "  " << k.first << "   " << k.second << "   " << m << "\n";
    os << "dim: " << h.total_dimension() << "\n";
    return os.str();
}

struct CommonOpts {
    std::string format = "table";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology characters for twisted divided powers of the "
                 "tautological subsheaf, with splitting types, Han-Monsky products "
                 "and Weak Lefschetz tests"};
    app.require_subcommand(1);
    app.set_version_flag("--version", incidence::kEngineVersion);
    int exit_code = 0;

    // ---- coh ----
    auto* coh = app.add_subcommand("coh", "character of H^i(D^d R(e))");
    struct {
        int n = 2, p = 0, i = 1;
        long d = 0, e = 0;
        std::string method = "recursive";
        CommonOpts common;
    } coh_opts;
    coh->add_option("--n", coh_opts.n, "number of variables")->required();
    coh->add_option("--p", coh_opts.p, "characteristic (0 or prime)")->required();
    coh->add_option("--i", coh_opts.i, "cohomological degree (0 or 1)")->required();
    coh->add_option("--d", coh_opts.d, "divided power")->required();
    coh->add_option("--e", coh_opts.e, "twist")->required();
    coh->add_option("--method", coh_opts.method, "computation method")
        ->check(CLI::IsMember({"recursive", "char2", "small-weights"}))
        ->capture_default_str();
    add_common(coh, coh_opts.common);
    coh->callback([&] {
        const auto t0 = std::chrono::steady_clock::now();
        if (coh_opts.method != "recursive" && coh_opts.i != 1)
            throw std::domain_error("methods char2 and small-weights compute h^1 only; "
                                    "pass --i 1");
        incidence::CohomologyEngine eng(coh_opts.n, coh_opts.p);
        SymLaurent c(coh_opts.n);
        if (coh_opts.method == "recursive")
            c = eng.character(coh_opts.i, coh_opts.d, coh_opts.e);
        else if (coh_opts.method == "char2")
            c = eng.char2_nonrecursive(coh_opts.d, coh_opts.e);
        else
            c = eng.small_weights(coh_opts.d, coh_opts.e);
        if (coh_opts.common.format == "json") {
            json payload = incidence::to_json(c);
            const Int dim = c.dimension();
            if (!dim.fits_slong_p())
                throw std::domain_error("dimension exceeds 64-bit output range");
            payload["dimension"] = dim.get_si();
            json env = incidence::make_envelope(
                "coh",
                {{"n", coh_opts.n}, {"p", coh_opts.p}, {"i", coh_opts.i},
                 {"d", coh_opts.d}, {"e", coh_opts.e}, {"method", coh_opts.method}},
                payload, elapsed_ms_since(t0));
            emit(env.dump(2) + "\n", coh_opts.common.out);
        } else {
            emit(table_symlaurent(c), coh_opts.common.out);
        }
    });

    // ---- pparts ----
    auto* pparts = app.add_subcommand("pparts", "principal parts on the projective line");
    pparts->require_subcommand(1);
    struct {
        int p = 2;
        long d = 0, r = 1;
        CommonOpts common;
    } pp_opts;
    auto* pp_split = pparts->add_subcommand("split", "splitting type of F^d_r");
    pp_split->add_option("--p", pp_opts.p, "characteristic (prime)")->required();
    pp_split->add_option("--d", pp_opts.d, "degree")->required();
    pp_split->add_option("--r", pp_opts.r, "order")->required();
    add_common(pp_split, pp_opts.common);
    pp_split->callback([&] {
        const auto t0 = std::chrono::steady_clock::now();
        incidence::PPartsEngine eng(pp_opts.p);
        const incidence::SplitType s = eng.split_Fdr(pp_opts.d, pp_opts.r);
        if (pp_opts.common.format == "json") {
            json env = incidence::make_envelope(
                "pparts split",
                {{"p", pp_opts.p}, {"d", pp_opts.d}, {"r", pp_opts.r}},
                incidence::to_json(s), elapsed_ms_since(t0));
            emit(env.dump(2) + "\n", pp_opts.common.out);
        } else {
            emit(table_split(s), pp_opts.common.out);
        }
    });
    auto* pp_ideals = pparts->add_subcommand(
        "ideals", "characters of B(d,r), C(d,r) and the quotient J(d-1,r-1)/J(d,r)");
    pp_ideals->add_option("--p", pp_opts.p, "characteristic (prime)")->required();
    pp_ideals->add_option("--d", pp_opts.d, "degree")->required();
    pp_ideals->add_option("--r", pp_opts.r, "order")->required();
    add_common(pp_ideals, pp_opts.common);
    pp_ideals->callback([&] {
        const auto t0 = std::chrono::steady_clock::now();
        incidence::PPartsEngine eng(pp_opts.p);
        const auto [b, c] = eng.bc_char(pp_opts.d, pp_opts.r);
        if (pp_opts.common.format == "json") {
            json payload = {{"B", incidence::to_json(b)}, {"C", incidence::to_json(c)}};
            if (pp_opts.r >= 1)
                payload["quotient"] = incidence::to_json(eng.quot_char(pp_opts.d, pp_opts.r));
            json env = incidence::make_envelope(
                "pparts ideals",
                {{"p", pp_opts.p}, {"d", pp_opts.d}, {"r", pp_opts.r}}, payload,
                elapsed_ms_since(t0));
            emit(env.dump(2) + "\n", pp_opts.common.out);
        } else {
            std::ostringstream os;
            os << table_bichar(b, "[B(d,r)]") << table_bichar(c, "[C(d,r)]");
            if (pp_opts.r >= 1)
                os << table_bichar(eng.quot_char(pp_opts.d, pp_opts.r),
                                   "[J(d-1,r-1)/J(d,r)]");
            emit(os.str(), pp_opts.common.out);
        }
    });

    // ---- hm ----
    auto* hm = app.add_subcommand("hm", "graded Han-Monsky representation ring");
    hm->require_subcommand(1);
    struct {
        int p = 2;
        std::vector<long> lengths;
        bool check_constraints = false;
        CommonOpts common;
    } hm_opts;
    auto* hm_prod = hm->add_subcommand("product", "decompose delta_{a_1} ... delta_{a_n}");
    hm_prod->add_option("--p", hm_opts.p, "characteristic (prime)")->required();
    hm_prod->add_option("--lengths", hm_opts.lengths, "block lengths, comma separated")
        ->required()
        ->delimiter(',');
    hm_prod->add_flag("--check-constraints", hm_opts.check_constraints,
                      "verify the prime-shift constraint on the result");
    add_common(hm_prod, hm_opts.common);
    hm_prod->callback([&] {
        const auto t0 = std::chrono::steady_clock::now();
        const incidence::HMClass h = incidence::hm_product(hm_opts.p, hm_opts.lengths);
        bool constraint_ok = true;
        if (hm_opts.check_constraints) {
            constraint_ok =
                incidence::check_prime_shift_constraint(hm_opts.p, hm_opts.lengths, h);
            if (!constraint_ok)
                throw std::logic_error("prime-shift constraint violated: internal error");
        }
        if (hm_opts.common.format == "json") {
            json payload = incidence::to_json(h);
            if (hm_opts.check_constraints) payload["constraints_ok"] = constraint_ok;
            json env = incidence::make_envelope(
                "hm product", {{"p", hm_opts.p}, {"lengths", hm_opts.lengths}}, payload,
                elapsed_ms_since(t0));
            emit(env.dump(2) + "\n", hm_opts.common.out);
        } else {
            std::ostringstream os;
            os << table_hm(h);
            if (hm_opts.check_constraints)
                os << "prime-shift constraint: " << (constraint_ok ? "ok" : "VIOLATED")
                   << "\n";
            emit(os.str(), hm_opts.common.out);
        }
    });

    // ---- wlp ----
    auto* wlp = app.add_subcommand("wlp", "Weak Lefschetz Property for monomial "
                                          "complete intersections");
    struct {
        int p = 2;
        std::vector<long> exponents;
        std::string method = "auto";
        CommonOpts common;
    } wlp_opts;
    wlp->add_option("--p", wlp_opts.p, "characteristic (0 or prime)")->required();
    wlp->add_option("--exponents", wlp_opts.exponents, "ideal exponents, comma separated")
        ->required()
        ->delimiter(',');
    wlp->add_option("--method", wlp_opts.method, "test method")
        ->check(CLI::IsMember({"auto", "char2", "cohomology", "oracle"}))
        ->capture_default_str();
    add_common(wlp, wlp_opts.common);
    wlp->callback([&] {
        const auto t0 = std::chrono::steady_clock::now();
        incidence::WlpMethod m = incidence::WlpMethod::Auto;
        if (wlp_opts.method == "char2") m = incidence::WlpMethod::Char2;
        else if (wlp_opts.method == "cohomology") m = incidence::WlpMethod::Cohomology;
        else if (wlp_opts.method == "oracle") m = incidence::WlpMethod::Oracle;
        const incidence::WlpResult res = incidence::wlp_query(wlp_opts.p, wlp_opts.exponents, m);
        if (wlp_opts.common.format == "json") {
            json env = incidence::make_envelope(
                "wlp",
                {{"p", wlp_opts.p}, {"exponents", wlp_opts.exponents},
                 {"method", wlp_opts.method}},
                incidence::to_json(res), elapsed_ms_since(t0));
            emit(env.dump(2) + "\n", wlp_opts.common.out);
        } else {
            std::ostringstream os;
            os << "wlp: " << (res.wlp ? "true" : "false") << "\n";
            if (res.witness_q) os << "violated at q = " << *res.witness_q << "\n";
            if (res.witness_monomial) {
                os << "witness monomial: ";
                for (std::size_t k = 0; k < res.witness_monomial->size(); ++k)
                    os << (k ? "," : "") << (*res.witness_monomial)[k];
                os << "\n";
            }
            emit(os.str(), wlp_opts.common.out);
        }
    });

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "run oracle cross-validation sweeps");
    struct {
        std::string module;
        std::string sweep = "all";
        int jobs = incidence::verify::default_jobs();
        CommonOpts common;
    } ver_opts;
    ver->add_option("module", ver_opts.module, "coh | pparts | hm | wlp")
        ->required()
        ->check(CLI::IsMember({"coh", "pparts", "hm", "wlp"}));
    ver->add_option("--sweep", ver_opts.sweep, "sweep preset (module specific; 'all')")
        ->capture_default_str();
    ver->add_option("--jobs", ver_opts.jobs, "worker count")->capture_default_str();
    add_common(ver, ver_opts.common);
    ver->callback([&] {
        const auto outcomes =
            incidence::verify::run_preset(ver_opts.module, ver_opts.sweep, ver_opts.jobs);
        std::ostringstream os;
        bool all_ok = true;
        json jarr = json::array();
        for (const auto& o : outcomes) {
            all_ok = all_ok && o.ok;
            if (ver_opts.common.format == "json") {
                jarr.push_back({{"sweep", o.name},
                                {"ok", o.ok},
                                {"cases", o.cases},
                                {"seconds", o.seconds},
                                {"first_failure", o.first_failure}});
            } else {
                os << (o.ok ? "[PASS] " : "[FAIL] ") << o.name << "  (" << o.cases
                   << " checks, " << o.seconds << " s)";
                if (!o.ok) os << "\n       first mismatch: " << o.first_failure;
                os << "\n";
            }
        }
        if (ver_opts.common.format == "json")
            emit(jarr.dump(2) + "\n", ver_opts.common.out);
        else
            emit(os.str(), ver_opts.common.out);
        if (!all_ok) exit_code = 4;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return exit_code;
}
