#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rauzy/count.hpp"
#include "rauzy/explore.hpp"
#include "rauzy/invariant.hpp"
#include "rauzy/partition.hpp"
#include "rauzy/perm.hpp"
#include "rauzy/verify.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

fs::path cache_dir() {
    if (const char* env = std::getenv("RAUZY_CACHE_DIR"))
        return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return fs::path(xdg) / "rauzy-classes";
    if (const char* home = std::getenv("HOME"))
        return fs::path(home) / ".cache" / "rauzy-classes";
    return fs::path(".rauzy-cache");
}

fs::path tables_path() { return cache_dir() / "tables.txt"; }

void load_tables() {
    rauzy::count_tables::load(tables_path().string());
}

void save_tables() {
    std::error_code ec;
    fs::create_directories(cache_dir(), ec);
    if (!ec)
        rauzy::count_tables::save(tables_path().string());
}

rauzy::ReducedPermutation parse_perm_arg(const std::string& text) {
    if (text.find('/') != std::string::npos)
        return rauzy::LabeledPermutation::parse(text).reduce();
    return rauzy::ReducedPermutation::parse(text);
}

json stats_to_json(const rauzy::ReducedPermutation& seed, bool extended,
                   const rauzy::ClassStats& st) {
    json out;
    out["seed"] = seed.str();
    out["extended"] = extended;
    out["size"] = std::to_string(st.size);
    out["standard_count"] = std::to_string(st.standard_count);
    out["profile"] = st.profile.str();
    if (!extended)
        out["left_degree"] = st.left_degree;
    if (st.spin != rauzy::SpinParity::Undefined)
        out["spin"] = static_cast<int>(st.spin);
    else
        out["spin"] = nullptr;
    json tally = json::object();
    for (const auto& [mk, cnt] : st.marking_tally)
        tally[mk] = std::to_string(cnt);
    out["marking_tally"] = tally;
    return out;
}

int cmd_invariants(const std::string& perm_text) {
    rauzy::ReducedPermutation pi = parse_perm_arg(perm_text);
    json out;
    out["permutation"] = pi.str();
    out["length"] = pi.size();
    out["irreducible"] = pi.is_irreducible();
    out["standard"] = pi.is_standard();
    rauzy::MarkedProfile mp = rauzy::marked_profile(pi);
    out["profile"] = mp.full_profile().str();
    out["marked_profile"] = mp.str();
    out["left_degree"] = mp.marking.left_degree();
    rauzy::SpinParity spin = rauzy::spin_parity(pi);
    if (spin != rauzy::SpinParity::Undefined)
        out["spin"] = static_cast<int>(spin);
    else
        out["spin"] = nullptr;
    if (!pi.is_irreducible()) {
        json factors = json::array();
        for (const auto& block : rauzy::decompose(pi))
            factors.push_back(block.str());
        out["factors"] = factors;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_predict(const std::string& profile_text, int degree) {
    rauzy::IntegerPartition p = rauzy::IntegerPartition::parse(profile_text);
    load_tables();
    json components = json::array();
    for (const auto& entry : rauzy::class_cardinalities(p)) {
        if (degree > 0 && entry.degree != degree)
            continue;
        if (entry.cardinality == 0)
            continue;
        json c;
        c["kind"] = rauzy::component_kind_str(entry.kind);
        c["degree"] = entry.degree;
        c["cardinality"] = entry.cardinality.get_str();
        components.push_back(c);
    }
    json out;
    out["profile"] = p.str();
    out["components"] = components;
    out["extended_total"] = rauzy::extended_class_total(p).get_str();
    save_tables();
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_build(const std::string& perm_text, bool extended, const std::string& dot_path,
              int threads) {
    rauzy::ReducedPermutation seed = parse_perm_arg(perm_text);
    if (!seed.is_irreducible()) {
        std::cerr << "error: class seed must be irreducible\n";
        return kExitUsage;
    }
    std::error_code ec;
    fs::create_directories(cache_dir(), ec);
    std::ostringstream fingerprint;
    fingerprint << "class-" << seed.size() << "-" << (extended ? "ext" : "plain");
    for (int v : seed.bottom())
        fingerprint << "-" << v;
    fs::path cache_file = cache_dir() / (fingerprint.str() + ".json");

    json out;
    bool need_diag = !dot_path.empty();
    if (!need_diag && fs::exists(cache_file)) {
        std::ifstream in(cache_file);
        try {
            in >> out;
        } catch (const std::exception&) {
            out = json();
        }
    }
    if (out.empty()) {
        rauzy::BuildOptions opts;
        opts.extended = extended;
        opts.threads = threads;
        rauzy::RauzyDiagram diag = rauzy::build_class(seed, opts);
        out = stats_to_json(seed, extended, rauzy::stats(diag));
        if (!dot_path.empty()) {
            std::ofstream dot(dot_path);
            if (!dot) {
                std::cerr << "error: cannot write " << dot_path << "\n";
                return kExitUsage;
            }
            rauzy::export_dot(diag, dot);
        }
        std::ofstream cache_out(cache_file);
        if (cache_out)
            cache_out << out.dump(2) << "\n";
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_census(int n) {
    rauzy::Census cs = rauzy::census(n);
    uint64_t irr_total = 0, std_total = 0;
    json entries = json::array();
    for (const auto& [key, cell] : cs) {
        irr_total += cell.irr;
        std_total += cell.std_count;
        json e;
        e["marked_profile"] = key;
        e["all"] = std::to_string(cell.all);
        e["irreducible"] = std::to_string(cell.irr);
        e["standard"] = std::to_string(cell.std_count);
        e["odd_spin"] = std::to_string(cell.all_odd);
        e["even_spin"] = std::to_string(cell.all_even);
        entries.push_back(e);
    }
    json out;
    out["n"] = n;
    out["irreducible_total"] = std::to_string(irr_total);
    out["standard_total"] = std::to_string(std_total);
    json classes = json::array();
    if (n <= 8) {
        for (const auto& c : rauzy::partition_into_classes(n)) {
            json e;
            e["seed"] = c.seed.str();
            e["size"] = std::to_string(c.size);
            e["profile"] = c.profile.str();
            e["left_degree"] = c.left_degree;
            if (c.spin != rauzy::SpinParity::Undefined)
                e["spin"] = static_cast<int>(c.spin);
            else
                e["spin"] = nullptr;
            classes.push_back(e);
        }
        out["classes"] = classes;
    }
    out["entries"] = entries;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_formulas(const std::string& partition_text, const std::string& marked_text) {
    load_tables();
    json out;
    if (!partition_text.empty()) {
        rauzy::IntegerPartition p = rauzy::IntegerPartition::parse(partition_text);
        out["partition"] = p.str();
        out["centralizer_order"] = rauzy::centralizer_order(p).get_str();
        if (p.valid_profile_parity() && !p.empty()) {
            out["c_closed"] = rauzy::c_closed(p).get_str();
            out["c_recursive"] = rauzy::c_recursive(p).get_str();
            out["c_goupil_schaeffer"] = rauzy::c_goupil_schaeffer(p).get_str();
            out["genus"] = rauzy::genus_of(p).g;
        }
        if (!p.empty() && p.all_odd()) {
            out["d_closed"] = rauzy::d_closed(p).get_str();
            out["d_recursive"] = rauzy::d_recursive(p).get_str();
        }
    }
    if (!marked_text.empty()) {
        rauzy::MarkedProfile mp = rauzy::MarkedProfile::parse(marked_text);
        json m;
        m["marked_profile"] = mp.str();
        m["full_profile"] = mp.full_profile().str();
        m["gamma_std"] = rauzy::gamma_std(mp).get_str();
        m["gamma_all"] = rauzy::gamma_all(mp).get_str();
        m["gamma_irr"] = rauzy::gamma_irr(mp).get_str();
        if (mp.full_profile().all_odd()) {
            m["delta_std"] = rauzy::delta_std(mp).get_str();
            m["delta_all"] = rauzy::delta_all(mp).get_str();
            m["delta_irr"] = rauzy::delta_irr(mp).get_str();
        }
        out["marked"] = m;
    }
    save_tables();
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(int max_letters, const std::string& formula, int max_sum, bool acceptance,
               bool big_class_search) {
    load_tables();
    int failures = 0;
    auto report = [](const rauzy::CheckResult& r) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name;
        if (!r.detail.empty())
            std::cout << " — " << r.detail;
        std::cout << "\n";
    };
    if (!formula.empty()) {
        // focused formula sweep
        bool ok = true;
        std::string bad;
        std::function<void(int, int, std::vector<int>&)> rec = [&](int left, int maxp,
                                                                   std::vector<int>& parts) {
            if (!ok)
                return;
            if (left == 0) {
                std::vector<int> copy = parts;
                rauzy::IntegerPartition p(std::move(copy));
                if (formula == "c" && p.valid_profile_parity() && !p.empty()) {
                    auto a = rauzy::c_closed(p);
                    if (a != rauzy::c_recursive(p) || a != rauzy::c_goupil_schaeffer(p)) {
                        ok = false;
                        bad = p.str();
                    }
                } else if (formula == "d" && p.all_odd() && !p.empty()) {
                    if (rauzy::d_closed(p) != rauzy::d_recursive(p)) {
                        ok = false;
                        bad = p.str();
                    }
                }
                return;
            }
            for (int v = std::min(left, maxp); v >= 1; --v) {
                parts.push_back(v);
                rec(left - v, v, parts);
                parts.pop_back();
            }
        };
        for (int m = 1; m <= max_sum && ok; ++m) {
            std::vector<int> parts;
            rec(m, m, parts);
        }
        report(rauzy::CheckResult{"formula-" + formula + "-agreement-to-" +
                                      std::to_string(max_sum),
                                  ok, ok ? "" : ("first mismatch at " + bad)});
        failures += ok ? 0 : 1;
    } else {
        rauzy::PropertyOptions popts;
        popts.max_letters = max_letters;
        failures += rauzy::run_checks(rauzy::property_checks(popts), report);
        if (acceptance) {
            rauzy::AcceptanceOptions aopts;
            aopts.big_class_search = big_class_search;
            failures += rauzy::run_checks(rauzy::acceptance_checks(aopts), report);
        }
    }
    save_tables();
    std::cout << (failures == 0 ? "all checks passed" : "failures: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants, enumeration and cardinality formulas for Rauzy classes"};
    app.require_subcommand(1);

    std::string perm_text, profile_text, marked_text, dot_path, formula;
    int degree = 0, census_n = 6, threads = 1, max_letters = 7, max_sum = 12;
    bool extended = false, stats_flag = false, acceptance = false, big_class = false;

    auto* inv = app.add_subcommand("invariants", "profile, marking and spin of a permutation");
    inv->add_option("permutation", perm_text, "bottom row, e.g. \"4 3 2 1\"")->required();

    auto* pred = app.add_subcommand("predict", "class cardinalities from the counting formulas");
    pred->add_option("profile", profile_text, "partition, e.g. \"4,3,2,1\"")->required();
    pred->add_option("--degree", degree, "restrict to one left degree");

    auto* bld = app.add_subcommand("build", "breadth-first closure of a class");
    bld->add_option("permutation", perm_text, "irreducible seed")->required();
    bld->add_flag("--extended", extended, "also close under the inversion");
    bld->add_option("--dot", dot_path, "write the diagram in DOT format");
    bld->add_flag("--stats", stats_flag, "print class statistics (default)");
    bld->add_option("--threads", threads, "worker threads for the frontier");

    auto* cen = app.add_subcommand("census", "tallies over all permutations of length n");
    cen->add_option("n", census_n, "number of letters (<= 9)")->required();

    auto* ver = app.add_subcommand("verify", "identity suites; exit 1 on any mismatch");
    ver->add_option("--max-letters", max_letters, "budget for exhaustive sweeps");
    ver->add_option("--formula", formula, "restrict to one formula family: c or d");
    ver->add_option("--max-sum", max_sum, "partition-sum budget for --formula");
    ver->add_flag("--acceptance", acceptance, "also run the acceptance checks");
    ver->add_flag("--big-class", big_class, "include the multi-million-vertex search");

    auto* frm = app.add_subcommand("formulas", "evaluate the counting formulas");
    frm->add_option("partition", profile_text, "partition, e.g. \"3,1,1\"");
    frm->add_option("--marked", marked_text, "marked profile, e.g. \"3|1;-\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (inv->parsed())
            return cmd_invariants(perm_text);
        if (pred->parsed())
            return cmd_predict(profile_text, degree);
        if (bld->parsed())
            return cmd_build(perm_text, extended, dot_path, threads);
        if (cen->parsed())
            return cmd_census(census_n);
        if (ver->parsed())
            return cmd_verify(max_letters, formula, max_sum, acceptance, big_class);
        if (frm->parsed())
            return cmd_formulas(profile_text, marked_text);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    (void)stats_flag;
    return kExitUsage;
}
