// Command-line surface for constructing, checking, enumerating, classifying
// and verifying self-dual generalized bent functions.
//
// Exit codes: 0 success/verified, 1 assertion failure, 2 usage error,
// 3 budget exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gbent/constructions.hpp"
#include "gbent/enumeration.hpp"
#include "gbent/function.hpp"
#include "gbent/gf2m.hpp"
#include "gbent/groups.hpp"
#include "gbent/io.hpp"

using namespace gbent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << content;
}

int default_threads() {
    if (const char* env = std::getenv("GBENT_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

std::uint32_t parse_bits(const std::string& s) {
    std::uint32_t v = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("bit string must consist of 0s and 1s");
        v = (v << 1) | std::uint32_t(ch - '0');
    }
    return v;
}

std::string function_body(const GBF& f) {
    return f.q.q <= 10 ? digit_string(f) : values_line(f);
}

void emit_constructed(const GBF& f, const std::string& out_path) {
    std::string text = emit_function(f);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

DualKind parse_kind(const std::string& s) {
    if (s == "sd") return DualKind::SelfDual;
    if (s == "asd") return DualKind::AntiSelfDual;
    throw std::invalid_argument("kind must be sd or asd");
}

int run(int argc, char** argv) {
    CLI::App app{"exact toolkit for self-dual generalized bent functions"};
    app.require_subcommand(1);
    app.fallthrough();  // allow the global flags after a subcommand name
    int threads = default_threads();
    std::uint64_t seed = 0xC0FFEE;
    bool json = false;
    app.add_option("--threads", threads, "worker thread count for searches");
    app.add_option("--seed", seed, "seed for randomized verification");
    app.add_flag("--json", json, "emit JSON reports on stdout");

    // ---- check ----
    auto* check = app.add_subcommand("check", "classify a function file");
    std::string check_file;
    check->add_option("file", check_file, "function file")->required();

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build a function");
    construct->require_subcommand(1);
    std::string out_path;
    construct->add_option("--out", out_path, "write the function file here");

    auto* c_mm = construct->add_subcommand("mm", "Maiorana-McFarland self-dual form");
    int mm_n = 0, mm_q = 0, mm_d = 0;
    bool mm_anti = false;
    std::vector<std::uint32_t> mm_rows;
    std::string mm_b;
    c_mm->add_option("--n", mm_n, "number of variables (even)")->required();
    c_mm->add_option("--q", mm_q, "modulus")->required();
    c_mm->add_option("--L", mm_rows, "orthogonal matrix rows as bitmasks")
        ->required()
        ->delimiter(',');
    c_mm->add_option("--b", mm_b, "translation vector bits, length n/2")->required();
    c_mm->add_option("--d", mm_d, "constant in Z_q");
    c_mm->add_flag("--anti", mm_anti, "build the anti-self-dual kind");

    auto* c_ds = construct->add_subcommand("direct-sum", "direct sum of function files");
    std::vector<std::string> ds_files;
    c_ds->add_option("files", ds_files, "part files")->required()->expected(-1);

    auto* c_dillon = construct->add_subcommand("dillon", "Dillon-type bivariate function");
    int di_m = 0, di_k = 1;
    std::vector<std::string> di_G;
    bool di_auto = false;
    c_dillon->add_option("--m", di_m, "field extension degree (2..4)")->required();
    c_dillon->add_option("--k", di_k, "number of components, q = 2^k");
    c_dillon->add_option("--G", di_G,
                         "component truth tables over GF(2^m) as bit strings "
                         "(polynomial-index order), repeated k times");
    c_dillon->add_flag("--auto", di_auto, "use the first valid component tuple");

    auto* c_iter = construct->add_subcommand("iterative", "n+2 variable iterative step");
    std::vector<std::string> it_files;
    bool it_mixed = false;
    c_iter->add_option("files", it_files, "input file (or sd file + asd file with --mixed)")
        ->required()
        ->expected(-1);
    c_iter->add_flag("--mixed", it_mixed, "mixed construction from (sd, asd) pair");

    auto* c_sym = construct->add_subcommand("symmetric", "two-variable-symmetric extension");
    std::string sym_file;
    c_sym->add_option("file", sym_file, "regular gbent input file")->required();

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "search (anti-)self-dual functions");
    int en_n = 0, en_q = 0;
    std::string en_kind = "sd", en_out;
    bool en_naive = false;
    enumerate->add_option("--n", en_n, "number of variables")->required();
    enumerate->add_option("--q", en_q, "modulus")->required();
    enumerate->add_option("--kind", en_kind, "sd or asd")->required();
    enumerate->add_flag("--naive", en_naive, "use the exhaustive q^(2^n) scan");
    enumerate->add_option("--out", en_out, "write the found functions as a list file");

    // ---- classify ----
    auto* classify_cmd = app.add_subcommand("classify", "orbit classification of a list file");
    std::string cl_in;
    int cl_n = 0, cl_q = 0;
    classify_cmd->add_option("--in", cl_in, "function list file")->required();
    classify_cmd->add_option("--n", cl_n, "expected n")->required();
    classify_cmd->add_option("--q", cl_q, "expected q")->required();

    // ---- spectrum ----
    auto* spectrum = app.add_subcommand("spectrum", "distance spectrum reports");
    std::string sp_class = "mm", sp_metric;
    int sp_n = 0, sp_q = 0;
    spectrum->add_option("--class", sp_class, "function class (mm)");
    spectrum->add_option("--n", sp_n, "number of variables")->required();
    spectrum->add_option("--q", sp_q, "modulus")->required();
    spectrum->add_option("--metric", sp_metric, "hamming or lee")->required();

    // ---- orthogonal ----
    auto* orthogonal = app.add_subcommand("orthogonal", "enumerate O_n over F_2");
    int or_n = 0;
    orthogonal->add_option("--n", or_n, "matrix size")->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "pass/fail verification scans");
    verify->require_subcommand(1);
    auto* v_affine = verify->add_subcommand("affine", "no affine function is self-dual");
    int va_n = 0, va_q = 0;
    v_affine->add_option("--n", va_n)->required();
    v_affine->add_option("--q", va_q)->required();
    auto* v_ub = verify->add_subcommand("upper-bound", "|SB+_{2^k}(n)| <= |SB+_2(n)|^k");
    int vu_n = 0, vu_k = 0;
    v_ub->add_option("--n", vu_n)->required();
    v_ub->add_option("--k", vu_k)->required();
    auto* v_qb = verify->add_subcommand("quarter-blocks",
                                        "vanishing quarter-block inner products");
    int vq_n = 0, vq_q = 0;
    v_qb->add_option("--n", vq_n)->required();
    v_qb->add_option("--q", vq_q)->required();
    auto* v_span = verify->add_subcommand("span", "span dimension of the sign functions");
    int vs_n = 0, vs_q = 0;
    v_span->add_option("--n", vs_n)->required();
    v_span->add_option("--q", vs_q)->required();
    auto* v_sym = verify->add_subcommand("symmetry",
                                         "random even-c symmetries preserve self-duality");
    int vy_n = 0, vy_q = 0, vy_samples = 50;
    v_sym->add_option("--n", vy_n)->required();
    v_sym->add_option("--q", vy_q)->required();
    v_sym->add_option("--samples", vy_samples, "number of random (function, element) pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (*check) {
        GBF f = parse_function(read_file(check_file));
        auto st = classify_duality(f);
        std::cout << duality_name(st.kind) << "\n";
        if (st.is_regular()) std::cout << "dual: " << function_body(*st.dual) << "\n";
        return kExitOk;
    }

    if (*construct) {
        GBF result = [&]() -> GBF {
            if (*c_mm) {
                if (mm_n < 2 || mm_n % 2 != 0)
                    throw std::invalid_argument("construct mm: --n must be even and >= 2");
                OrthMatrix L(mm_n / 2, std::vector<std::uint32_t>(mm_rows.begin(), mm_rows.end()));
                GF2Vector b(parse_bits(mm_b), mm_n / 2);
                return mm_self_dual(MMParameters(L, b, zq_norm(mm_d, mm_q)), QParam(mm_q),
                                    mm_anti);
            }
            if (*c_ds) {
                std::vector<GBF> parts;
                for (const auto& p : ds_files) parts.push_back(parse_function(read_file(p)));
                return direct_sum(parts);
            }
            if (*c_dillon) {
                GF2mField field(di_m);
                if (di_auto) {
                    auto tuples = dillon_search_components(field, di_k);
                    if (tuples.empty())
                        throw std::invalid_argument(
                            "construct dillon: no valid component tuple exists");
                    return dillon(field, tuples.front());
                }
                if (int(di_G.size()) != di_k)
                    throw std::invalid_argument(
                        "construct dillon: need --G repeated k times (or --auto)");
                std::vector<GBF> G;
                for (const auto& s : di_G) {
                    if (int(s.size()) != field.size())
                        throw std::invalid_argument(
                            "construct dillon: component length must be 2^m");
                    std::vector<int> tab(field.size());
                    for (size_t i = 0; i < s.size(); ++i) {
                        if (s[i] != '0' && s[i] != '1')
                            throw std::invalid_argument("construct dillon: bits only");
                        tab[i] = s[i] - '0';
                    }
                    G.emplace_back(di_m, QParam(2), std::move(tab));
                }
                return dillon(field, G);
            }
            if (*c_iter) {
                if (it_mixed) {
                    if (it_files.size() != 2)
                        throw std::invalid_argument(
                            "construct iterative --mixed: need sd file and asd file");
                    return iterative_mixed(parse_function(read_file(it_files[0])),
                                           parse_function(read_file(it_files[1])));
                }
                if (it_files.size() != 1)
                    throw std::invalid_argument("construct iterative: need one input file");
                return iterative_self_dual(parse_function(read_file(it_files[0])));
            }
            return two_var_symmetric(parse_function(read_file(sym_file)));
        }();
        emit_constructed(result, out_path);
        return kExitOk;
    }

    if (*enumerate) {
        DualKind kind = parse_kind(en_kind);
        SearchReport rep = en_naive ? enumerate_naive(en_n, en_q, kind)
                                    : enumerate_self_dual(en_n, en_q, kind, threads);
        if (!en_out.empty()) write_file(en_out, emit_function_list(rep.found));
        if (json) {
            std::cout << to_json(rep).dump(2) << "\n";
        } else {
            std::cout << "kind " << kind_name(rep.kind) << " n " << rep.n << " q " << rep.q
                      << ": found " << rep.found.size() << " functions, scanned "
                      << rep.candidates_scanned << " candidates in " << rep.elapsed_ms
                      << " ms\n";
            if (!en_out.empty()) std::cout << "list written to " << en_out << "\n";
        }
        return kExitOk;
    }

    if (*classify_cmd) {
        auto fns = parse_function_list(read_file(cl_in));
        if (fns[0].n != cl_n || fns[0].q.q != cl_q)
            throw std::invalid_argument("classify: list header does not match --n/--q");
        auto orbits = classify_orbits(fns);
        if (json)
            std::cout << to_json(orbits, cl_q).dump(2) << "\n";
        else
            std::cout << orbit_table(orbits, cl_q);
        return kExitOk;
    }

    if (*spectrum) {
        if (sp_class != "mm")
            throw std::invalid_argument("spectrum: only --class mm is available");
        SpectrumReport rep;
        if (sp_metric == "hamming")
            rep = hamming_spectrum_mm(sp_n, sp_q);
        else if (sp_metric == "lee")
            rep = lee_spectrum_mm(sp_n, sp_q);
        else
            throw std::invalid_argument("spectrum: metric must be hamming or lee");
        if (json) {
            std::cout << to_json(rep).dump(2) << "\n";
        } else {
            std::cout << (rep.metric == Metric::Hamming ? "hamming" : "lee")
                      << " spectrum over " << rep.sd_count << "+" << rep.asd_count
                      << " MM functions (n=" << rep.n << ", q=" << rep.q << ")\n";
            std::cout << "observed:";
            for (const auto& [d, c] : rep.observed) std::cout << " " << d << "(x" << c << ")";
            std::cout << "\npredicted:";
            for (long long p : rep.predicted) std::cout << " " << p;
            std::cout << "\ncontained: " << (rep.contained ? "yes" : "no")
                      << ", min nonzero: " << rep.min_nonzero << "\n";
        }
        return rep.contained ? kExitOk : kExitAssertion;
    }

    if (*orthogonal) {
        auto mats = enumerate_orthogonal(or_n);
        if (json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& L : mats) arr.push_back(L.rows);
            std::cout << nlohmann::json{{"n", or_n}, {"count", mats.size()},
                                        {"matrices", std::move(arr)}}
                             .dump(2)
                      << "\n";
        } else {
            for (const auto& L : mats) {
                for (int i = 0; i < L.n; ++i) std::cout << L.rows[i] << (i + 1 < L.n ? " " : "");
                std::cout << "\n";
            }
            std::cout << "count " << mats.size() << "\n";
        }
        return kExitOk;
    }

    // ---- verify ----
    bool pass = true;
    nlohmann::json jrep;
    if (*v_affine) {
        auto rep = affine_scan(va_n, va_q);
        pass = rep.self_dual == 0;
        jrep = to_json(rep);
        jrep["pass"] = pass;
        if (!json)
            std::cout << (pass ? "PASS" : "FAIL") << " affine: " << rep.self_dual
                      << " self-dual among " << rep.total << " affine functions ("
                      << rep.gbent << " gbent)\n";
    } else if (*v_ub) {
        auto rep = upper_bound_check(vu_n, vu_k);
        pass = rep.holds;
        jrep = to_json(rep);
        jrep["pass"] = pass;
        if (!json)
            std::cout << (pass ? "PASS" : "FAIL") << " upper-bound: " << rep.count_2k
                      << " <= " << rep.bound << " (base " << rep.count_2 << ")\n";
    } else if (*v_qb) {
        auto rep = enumerate_self_dual(vq_n, vq_q, DualKind::SelfDual, threads);
        long long bad = 0;
        for (const auto& f : rep.found)
            if (!verify_quarter_block_products(f)) ++bad;
        pass = bad == 0;
        jrep = {{"n", vq_n}, {"q", vq_q}, {"functions", rep.found.size()},
                {"violations", bad}, {"pass", pass}};
        if (!json)
            std::cout << (pass ? "PASS" : "FAIL") << " quarter-blocks: " << bad
                      << " violations among " << rep.found.size() << " self-dual functions\n";
    } else if (*v_span) {
        auto rep = enumerate_self_dual(vs_n, vs_q, DualKind::SelfDual, threads);
        int dim = span_dimension(rep.found);
        int expected = vs_n >= 4 ? (1 << (vs_n - 1)) : 1;
        pass = dim == expected;
        jrep = {{"n", vs_n}, {"q", vs_q}, {"functions", rep.found.size()},
                {"dimension", dim}, {"expected", expected}, {"pass", pass}};
        if (!json)
            std::cout << (pass ? "PASS" : "FAIL") << " span: dimension " << dim
                      << " (expected " << expected << ") over " << rep.found.size()
                      << " sign functions\n";
    } else if (*v_sym) {
        auto rep = enumerate_self_dual(vy_n, vy_q, DualKind::SelfDual, threads);
        auto group = enumerate_orthogonal(vy_n);
        std::mt19937_64 rng(seed);
        long long bad = 0;
        for (int t = 0; t < vy_samples; ++t) {
            const GBF& f = rep.found[rng() % rep.found.size()];
            const OrthMatrix& L = group[rng() % group.size()];
            std::uint32_t c;
            do { c = std::uint32_t(rng()) & ((1u << vy_n) - 1); } while (std::popcount(c) & 1);
            int d = int(rng() % vy_q);
            GBF img = apply_symmetry(f, ExtOrthElement(L, GF2Vector(c, vy_n), d));
            if (classify_duality(img).kind != DualityKind::SelfDual) ++bad;
        }
        pass = bad == 0;
        jrep = {{"n", vy_n}, {"q", vy_q}, {"samples", vy_samples},
                {"violations", bad}, {"pass", pass}};
        if (!json)
            std::cout << (pass ? "PASS" : "FAIL") << " symmetry: " << bad
                      << " violations over " << vy_samples << " random pairs\n";
    }
    if (json) std::cout << jrep.dump(2) << "\n";
    return pass ? kExitOk : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
