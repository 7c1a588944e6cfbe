// Command-line front end: coset inspection, leader enumeration, the delta
// ladders, dimension records/tables, and the claim verification sweep.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcoset/qcoset.hpp"
#include "qcoset/report.hpp"

namespace {

using namespace qcoset;

enum class Format { table, json, csv };

Format parse_format(const std::string& s) {
    if (s == "table") return Format::table;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw CLI::ValidationError("--format must be table, json or csv");
}

std::pair<Int, Int> parse_range(const std::string& s) {
    const auto pos = s.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError("--range expects the form a..b");
    return {Int(s.substr(0, pos)), Int(s.substr(pos + 2))};
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("QCOSET_MAX_N")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw std::domain_error("QCOSET_MAX_N must be a positive integer");
        }
    }
    return kDefaultScanBudget;
}

const char* status_name(ProofStatus s) {
    return s == ProofStatus::proved ? "proved" : "conjectured";
}

void print_coset(const CodeParams& p, const Int& x, Format fmt) {
    const Coset c = orbit(p, x);
    if (fmt == Format::json) {
        json j{{"q", p.q}, {"m", p.m}, {"n", p.n.str()}, {"x", x.str()},
               {"leader", c.leader.str()}, {"size", c.size}};
        json elems = json::array();
        for (const auto& e : *c.elements) elems.push_back(e.str());
        j["elements"] = std::move(elems);
        j["is_leader"] = (x >= 1 && is_coset_leader(p, x));
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "n = " << p.n << ", orbit of " << x << ":\n  elements = {";
    for (std::size_t i = 0; i < c.elements->size(); ++i)
        std::cout << (i ? ", " : "") << (*c.elements)[i];
    std::cout << "}\n  leader = " << c.leader << ", size = " << c.size << "\n";
    if (x >= 1)
        std::cout << "  x is " << (is_coset_leader(p, x) ? "" : "not ") << "a coset leader\n";
}

void print_leader_list(const CodeParams& p, const std::vector<Int>& leaders, Format fmt) {
    if (fmt == Format::json) {
        json j{{"q", p.q}, {"m", p.m}, {"n", p.n.str()}};
        json arr = json::array();
        for (const auto& l : leaders) arr.push_back(l.str());
        j["leaders"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "q,m,n,leader\n";
        for (const auto& l : leaders)
            std::cout << p.q << ',' << p.m << ',' << p.n << ',' << l << '\n';
    } else {
        std::cout << "leaders:";
        for (const auto& l : leaders) std::cout << ' ' << l;
        std::cout << "\n";
    }
}

int run_deltas(const CodeParams& p, bool verify, std::uint64_t budget, Format fmt) {
    const DeltaLadder lad = delta_ladder(p);
    std::vector<Int> top;
    if (verify && !lad.entries.empty())
        top = largest_leaders(p, lad.entries.back().rank, budget);
    bool proved_mismatch = false;

    if (fmt == Format::json) {
        json j{{"q", p.q}, {"m", p.m}, {"n", p.n.str()}};
        json entries = json::array();
        for (const auto& e : lad.entries) {
            json ej{{"rank", e.rank}, {"value", e.value.str()}, {"status", status_name(e.status)}};
            ej["coset_size_claim"] = e.size_claim ? json(e.size_claim->str()) : json(nullptr);
            if (verify) {
                const Int oracle = e.rank <= top.size() ? top[e.rank - 1] : Int(-1);
                ej["oracle"] = oracle.str();
                ej["matches_oracle"] = (oracle == e.value);
                if (oracle != e.value && e.status == ProofStatus::proved) proved_mismatch = true;
            }
            entries.push_back(std::move(ej));
        }
        j["entries"] = std::move(entries);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (fmt == Format::csv ? "rank,value,status,coset_size_claim"
                                         : "rank  value  status  |C| claim");
        if (verify) std::cout << (fmt == Format::csv ? ",oracle,match" : "  oracle  match");
        std::cout << "\n";
        for (const auto& e : lad.entries) {
            const std::string claim = e.size_claim ? e.size_claim->str() : "-";
            if (fmt == Format::csv)
                std::cout << e.rank << ',' << e.value << ',' << status_name(e.status) << ','
                          << claim;
            else
                std::cout << e.rank << "  " << e.value << "  " << status_name(e.status) << "  "
                          << claim;
            if (verify) {
                const Int oracle = e.rank <= top.size() ? top[e.rank - 1] : Int(-1);
                const bool match = oracle == e.value;
                if (!match && e.status == ProofStatus::proved) proved_mismatch = true;
                std::cout << (fmt == Format::csv ? "," : "  ") << oracle
                          << (fmt == Format::csv ? "," : "  ") << (match ? "yes" : "NO");
            }
            std::cout << "\n";
        }
    }
    if (proved_mismatch) {
        std::cerr << "error: a proved ladder rank disagrees with the oracle\n";
        return 1;
    }
    return 0;
}

void print_record(const DimensionRecord& r, Format fmt, bool with_header = true) {
    if (fmt == Format::json) {
        std::cout << to_json(r).dump(2) << "\n";
    } else if (fmt == Format::csv) {
        if (with_header) std::cout << kDimensionCsvHeader << "\n";
        write_dimension_csv_row(std::cout, r);
    } else {
        std::cout << "n = " << r.spec.params.n << ", delta = " << r.spec.delta
                  << ", b = " << r.spec.b << "\n"
                  << "  |T| = " << r.t_size << "\n  dimension = " << r.dimension << "\n";
        if (r.bose_distance) std::cout << "  bose distance = " << *r.bose_distance << "\n";
        if (r.closed_form)
            std::cout << "  closed form = " << *r.closed_form << " (" << *r.closed_form_source
                      << ", " << (r.closed_form_agrees ? "agrees" : "DISAGREES") << ")\n";
    }
}

int run_verify(const GridSpec& grid, const std::vector<Claim>& claims, unsigned jobs,
               const std::string& out_path) {
    const SweepReport rep = sweep(grid, claims, jobs);
    bool conjecture_warn = false;
    for (const auto& c : rep.claims) {
        std::size_t pass = 0, fail = 0, inap = 0, skip = 0, cons = 0, cex = 0;
        for (const auto& cell : c.cells) {
            switch (cell.outcome) {
                case Outcome::pass: ++pass; break;
                case Outcome::fail: ++fail; break;
                case Outcome::inapplicable: ++inap; break;
                case Outcome::consistent: ++cons; break;
                case Outcome::counterexample: ++cex; break;
                default: ++skip; break;
            }
            if (cell.outcome == Outcome::fail || cell.outcome == Outcome::counterexample) {
                std::ostream& os = cell.outcome == Outcome::fail ? std::cerr : std::cout;
                os << (cell.outcome == Outcome::fail ? "FAIL " : "warning: counterexample ")
                   << c.claim_id << " at (q=" << cell.q << ", m=" << cell.m << ")";
                for (const auto& ce : cell.counterexamples)
                    os << " [witness " << ce.witness << ": expected " << ce.expected << ", got "
                       << ce.observed << "]";
                if (!cell.note.empty()) os << " -- " << cell.note;
                os << "\n";
                if (cell.outcome == Outcome::counterexample) conjecture_warn = true;
            }
        }
        std::cout << c.claim_id << " (" << to_string(c.kind) << "): ";
        if (c.kind == ClaimKind::conjecture)
            std::cout << cons << " consistent, " << cex << " counterexample, ";
        else
            std::cout << pass << " pass, " << fail << " fail, ";
        std::cout << inap << " inapplicable, " << skip << " skipped\n";
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write report to " << out_path << "\n";
            return 2;
        }
        out << to_json(rep).dump(2) << "\n";
        std::cout << "report written to " << out_path << "\n";
    }
    if (conjecture_warn)
        std::cout << "note: conjecture counterexamples are findings, not failures\n";
    return has_hard_failure(rep) ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-cyclotomic cosets modulo n = q^m + 1: leaders, delta ladders, "
                 "BCH dimensions and claim verification"};
    app.set_version_flag("--version", QCOSET_VERSION_STRING);
    app.require_subcommand(1);

    unsigned q = 0, m = 0;
    std::string range_str, format_str = "table";
    std::uint64_t x_val = 0;
    bool have_x = false;

    auto add_qm = [&](CLI::App* cmd) {
        cmd->add_option("--q", q, "prime power base")->required();
        cmd->add_option("--m", m, "exponent (n = q^m + 1)")->required();
        cmd->add_option("--format", format_str, "output format: table, json or csv");
    };

    auto* cosets = app.add_subcommand("cosets", "orbit, leader and size of a coset");
    add_qm(cosets);
    auto* xopt = cosets->add_option("--x", x_val, "residue to inspect");
    cosets->add_option("--range", range_str, "list leaders in a..b instead");

    auto* leaders = app.add_subcommand("leaders", "enumerate coset leaders");
    add_qm(leaders);
    leaders->add_option("--range", range_str, "ascending leaders in a..b");
    std::size_t top_count = 0;
    leaders->add_option("--top", top_count, "the K largest leaders, descending");

    auto* deltas = app.add_subcommand("deltas", "ordered largest coset leaders");
    add_qm(deltas);
    bool verify_flag = false;
    deltas->add_flag("--verify", verify_flag, "compare each rank against the exhaustive oracle");

    auto* dims = app.add_subcommand("dims", "dimension record for one designed distance");
    add_qm(dims);
    std::string delta_str;
    int b = 1;
    dims->add_option("--delta", delta_str, "designed distance (2..n)")->required();
    dims->add_option("--b", b, "0 or 1; 0 prepends the zero coset");

    auto* table = app.add_subcommand("table", "dimension records over a delta range");
    add_qm(table);
    std::string from_str, to_str;
    table->add_option("--from", from_str, "first delta")->required();
    table->add_option("--to", to_str, "last delta")->required();
    table->add_option("--b", b, "0 or 1; 0 prepends the zero coset");

    auto* verify = app.add_subcommand("verify", "run registered claims over a parameter grid");
    std::vector<std::string> claim_ids;
    std::vector<unsigned> grid_q, grid_m;
    std::uint64_t max_n = default_budget();
    double cell_timeout = 3600.0;
    unsigned jobs = 1;
    std::string out_path;
    bool all_claims = false;
    verify->add_flag("--all", all_claims, "run every registered claim");
    verify->add_option("--claims", claim_ids, "comma-separated claim ids")->delimiter(',');
    verify->add_option("--q", grid_q, "grid q values (default 3,4,5,7,8,9)")->delimiter(',');
    verify->add_option("--m", grid_m, "grid m values (default 2..7)")->delimiter(',');
    verify->add_option("--max-n", max_n, "skip cells with n above this bound");
    verify->add_option("--cell-timeout", cell_timeout, "per-cell wall-clock budget in seconds");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--out", out_path, "write the JSON report here");

    try {
        app.parse(argc, argv);

        const Format fmt = parse_format(format_str);

        if (cosets->parsed()) {
            const CodeParams p = CodeParams::make(q, m);
            if (!range_str.empty()) {
                const auto [lo, hi] = parse_range(range_str);
                print_leader_list(p, leaders_in_range(p, lo, hi), fmt);
            } else if (xopt->count()) {
                if (fmt == Format::csv)
                    throw std::domain_error("csv is not supported for single-orbit output");
                print_coset(p, Int(x_val), fmt);
            } else {
                throw std::domain_error("cosets requires --x or --range");
            }
            return 0;
        }
        if (leaders->parsed()) {
            const CodeParams p = CodeParams::make(q, m);
            if (!range_str.empty()) {
                const auto [lo, hi] = parse_range(range_str);
                print_leader_list(p, leaders_in_range(p, lo, hi), fmt);
            } else if (top_count > 0) {
                print_leader_list(p, largest_leaders(p, top_count, default_budget()), fmt);
            } else {
                throw std::domain_error("leaders requires --range or --top");
            }
            return 0;
        }
        if (deltas->parsed())
            return run_deltas(CodeParams::make(q, m), verify_flag, default_budget(), fmt);
        if (dims->parsed()) {
            const CodeParams p = CodeParams::make(q, m);
            print_record(dimension_record(DefiningSetSpec::make(p, Int(delta_str), b)), fmt);
            return 0;
        }
        if (table->parsed()) {
            const CodeParams p = CodeParams::make(q, m);
            const auto records =
                dimension_table(p, {Int(from_str), Int(to_str)}, b, default_budget());
            if (fmt == Format::json) {
                json arr = json::array();
                for (const auto& r : records) arr.push_back(to_json(r));
                std::cout << arr.dump(2) << "\n";
            } else if (fmt == Format::csv) {
                std::cout << kDimensionCsvHeader << "\n";
                for (const auto& r : records) print_record(r, Format::csv, false);
            } else {
                std::cout << "delta  |T|  dim  bose  closed_form  source\n";
                for (const auto& r : records) {
                    std::cout << r.spec.delta << "  " << r.t_size << "  " << r.dimension << "  "
                              << (r.bose_distance ? r.bose_distance->str() : "-") << "  "
                              << (r.closed_form ? r.closed_form->str() : "-") << "  "
                              << (r.closed_form_source ? *r.closed_form_source : "-") << "\n";
                }
            }
            return 0;
        }
        if (verify->parsed()) {
            if (!all_claims && claim_ids.empty())
                throw std::domain_error("verify requires --all or --claims");
            GridSpec grid = GridSpec::default_grid();
            if (!grid_q.empty()) grid.qs = grid_q;
            if (!grid_m.empty()) grid.ms = grid_m;
            grid.max_n = max_n;
            grid.cell_time_budget_s = cell_timeout;
            const std::vector<Claim> claims =
                all_claims ? registry() : claims_by_ids(claim_ids);
            return run_verify(grid, claims, jobs, out_path);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
