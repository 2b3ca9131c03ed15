// ffpnt — counts of monic irreducible polynomials over F_q, the exact-rational
// asymptotic expansion of pi_q with a certified remainder bound, brute-force
// oracle comparison and the verification suites. Emits CSV or JSON tables.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffpnt/arith.hpp"
#include "ffpnt/expansion.hpp"
#include "ffpnt/ffpoly.hpp"
#include "ffpnt/parallel.hpp"

namespace {

using ffpnt::BoundConstants;
using ffpnt::Int;
using ffpnt::PrimePower;
using ffpnt::Rat;

struct Range {
    unsigned lo = 0;
    unsigned hi = 0;
    unsigned size() const { return hi - lo + 1; }
};

struct RunConfig {
    std::string command;
    std::vector<PrimePower> q_list;
    Range n;
    Range m{1, 1};
    std::string format = "csv";
    std::string out_path;
    std::int64_t sqrt_slack = 1'000'000;
    std::int64_t oracle_budget = 10'000'000;
    BoundConstants constants;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Range parse_range(const std::string& s, const char* name) {
    auto fail = [&] { throw ConfigError(std::string("invalid ") + name + " range: '" + s + "'"); };
    Range r;
    try {
        auto dots = s.find("..");
        if (dots == std::string::npos) {
            r.lo = r.hi = static_cast<unsigned>(std::stoul(s));
        } else {
            r.lo = static_cast<unsigned>(std::stoul(s.substr(0, dots)));
            r.hi = static_cast<unsigned>(std::stoul(s.substr(dots + 2)));
        }
    } catch (const std::exception&) {
        fail();
    }
    if (r.lo < 1 || r.lo > r.hi) fail();
    return r;
}

std::vector<PrimePower> parse_q_list(const std::string& s) {
    std::vector<PrimePower> qs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::int64_t v = 0;
        try {
            v = std::stoll(item);
        } catch (const std::exception&) {
            throw ConfigError("invalid q value: '" + item + "'");
        }
        qs.push_back(PrimePower::from_q(v));  // throws with the offending value
    }
    if (qs.empty()) throw ConfigError("no field sizes given");
    return qs;
}

Rat parse_rational(const std::string& s, const char* name) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0 || r.get_den() == 0)
        throw ConfigError(std::string("invalid rational for ") + name + ": '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& v) { return v.get_str(); }

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// table assembly
// ---------------------------------------------------------------------------

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_output(const RunConfig& cfg, const Table& table, const nlohmann::json* extra) {
    std::ostringstream body;
    if (cfg.format == "csv") {
        for (std::size_t i = 0; i < table.header.size(); ++i)
            body << (i ? "," : "") << table.header[i];
        body << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) body << (i ? "," : "") << row[i];
            body << "\n";
        }
    } else {
        nlohmann::json doc;
        nlohmann::json cfg_json;
        cfg_json["command"] = cfg.command;
        std::vector<std::int64_t> qs;
        for (const auto& q : cfg.q_list) qs.push_back(q.q);
        cfg_json["q"] = qs;
        cfg_json["n"] = {cfg.n.lo, cfg.n.hi};
        cfg_json["m"] = {cfg.m.lo, cfg.m.hi};
        cfg_json["format"] = cfg.format;
        cfg_json["sqrt_slack"] = cfg.sqrt_slack;
        cfg_json["oracle_budget"] = cfg.oracle_budget;
        doc["config"] = cfg_json;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : table.rows) {
            nlohmann::json r;
            for (std::size_t i = 0; i < row.size(); ++i) r[table.header[i]] = row[i];
            rows.push_back(std::move(r));
        }
        doc["rows"] = std::move(rows);
        if (extra) doc["summary"] = *extra;
        body << doc.dump(2) << "\n";
    }
    if (cfg.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw ConfigError("cannot open output file: " + cfg.out_path);
        f << body.str();
    }
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

int cmd_count(const RunConfig& cfg) {
    Table t;
    t.header = {"q", "n", "degree_count", "pi_q"};
    for (const auto& q : cfg.q_list) {
        Int pi = 0;
        for (unsigned k = 1; k < cfg.n.lo; ++k) pi += ffpnt::count_degree_exact(q, k);
        for (unsigned n = cfg.n.lo; n <= cfg.n.hi; ++n) {
            Int dc = ffpnt::count_degree_exact(q, n);
            pi += dc;
            t.rows.push_back({std::to_string(q.q), std::to_string(n), dc.get_str(), pi.get_str()});
        }
    }
    write_output(cfg, t, nullptr);
    return 0;
}

int cmd_expand(const RunConfig& cfg) {
    Table t;
    t.header = {"q",         "n",     "m",     "exact", "leading",        "corrections",
                "remainder", "bound", "holds", "approx_leading", "approx_remainder",
                "approx_bound"};
    struct Cell {
        const PrimePower* q;
        unsigned n, m;
    };
    std::vector<Cell> cells;
    for (const auto& q : cfg.q_list)
        for (unsigned n = cfg.n.lo; n <= cfg.n.hi; ++n)
            for (unsigned m = cfg.m.lo; m <= cfg.m.hi; ++m) cells.push_back({&q, n, m});
    std::vector<std::vector<std::string>> rows(cells.size());
    ffpnt::parallel_chunks(0, cells.size(), 0, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            const Cell& c = cells[i];
            auto rep = ffpnt::expand({*c.q, c.n, c.m}, Int(static_cast<long>(cfg.sqrt_slack)),
                                     cfg.constants);
            std::string corr;
            for (std::size_t j = 0; j < rep.correction_terms.size(); ++j)
                corr += (j ? ";" : "") + rat_str(rep.correction_terms[j]);
            rows[i] = {std::to_string(c.q->q),
                       std::to_string(c.n),
                       std::to_string(c.m),
                       rep.exact_count.get_str(),
                       rat_str(rep.leading_term),
                       corr,
                       rat_str(rep.remainder),
                       rat_str(rep.bound),
                       bool_str(rep.bound_holds),
                       ffpnt::decimal_string(rep.leading_term),
                       ffpnt::decimal_string(rep.remainder),
                       ffpnt::decimal_string(rep.bound)};
        }
    });
    t.rows = std::move(rows);
    write_output(cfg, t, nullptr);
    return 0;
}

int cmd_table(const RunConfig& cfg) {
    Table t;
    t.header = {"q",
                "n",
                "m",
                "ratio_exact_over_leading",
                "relative_remainder",
                "bound_over_x_term",
                "approx_ratio_exact_over_leading",
                "approx_relative_remainder",
                "approx_bound_over_x_term"};
    struct Cell {
        const PrimePower* q;
        unsigned n, m;
    };
    std::vector<Cell> cells;
    for (const auto& q : cfg.q_list)
        for (unsigned n = cfg.n.lo; n <= cfg.n.hi; ++n)
            for (unsigned m = cfg.m.lo; m <= cfg.m.hi; ++m) cells.push_back({&q, n, m});
    std::vector<std::vector<std::string>> rows(cells.size());
    ffpnt::parallel_chunks(0, cells.size(), 0, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            const Cell& c = cells[i];
            auto rep = ffpnt::expand({*c.q, c.n, c.m}, Int(static_cast<long>(cfg.sqrt_slack)),
                                     cfg.constants);
            Rat ratio = Rat(rep.exact_count) / rep.leading_term;
            Rat rel_rem = rep.remainder / Rat(rep.exact_count);
            Rat x_term = ffpnt::make_rat(ffpnt::int_pow(Int(static_cast<long>(c.q->q)), c.n), Int(c.n));
            Rat bound_ratio = rep.bound / x_term;
            rows[i] = {std::to_string(c.q->q),
                       std::to_string(c.n),
                       std::to_string(c.m),
                       rat_str(ratio),
                       rat_str(rel_rem),
                       rat_str(bound_ratio),
                       ffpnt::decimal_string(ratio),
                       ffpnt::decimal_string(rel_rem),
                       ffpnt::decimal_string(bound_ratio)};
        }
    });
    t.rows = std::move(rows);
    write_output(cfg, t, nullptr);
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    Table t;
    t.header = {"q", "n", "bruteforce_count", "formula_count", "match"};
    bool mismatch = false;
    for (const auto& q : cfg.q_list) {
        ffpnt::FieldContext ctx = ffpnt::FieldContext::build(q.p, q.e);
        for (unsigned n = cfg.n.lo; n <= cfg.n.hi; ++n) {
            Int size = ffpnt::int_pow(Int(static_cast<long>(q.q)), n);
            Int formula = ffpnt::count_degree_exact(q, n);
            if (size > cfg.oracle_budget) {
                t.rows.push_back({std::to_string(q.q), std::to_string(n), "", formula.get_str(),
                                  "skipped"});
                continue;
            }
            Int bf = ffpnt::count_irreducible_bruteforce(ctx, n, cfg.oracle_budget);
            bool ok = bf == formula;
            if (!ok) mismatch = true;
            t.rows.push_back({std::to_string(q.q), std::to_string(n), bf.get_str(),
                              formula.get_str(), bool_str(ok)});
        }
    }
    write_output(cfg, t, nullptr);
    return mismatch ? 1 : 0;
}

int cmd_verify(const RunConfig& cfg) {
    Table t;
    t.header = {"check", "q", "n", "m", "pass"};
    unsigned long total = 0, failed = 0;
    auto push = [&](const std::string& family, std::int64_t q, unsigned n, unsigned m, bool pass) {
        ++total;
        if (!pass) ++failed;
        t.rows.push_back({family, std::to_string(q), std::to_string(n), std::to_string(m),
                          bool_str(pass)});
    };

    auto cells = ffpnt::verify_bound_grid(cfg.q_list, cfg.n.lo, cfg.n.hi, cfg.m.lo, cfg.m.hi,
                                          Int(static_cast<long>(cfg.sqrt_slack)), cfg.constants);
    for (const auto& c : cells) push("remainder_bound", c.q.q, c.n, c.m, c.holds);

    for (const auto& q : cfg.q_list) {
        for (const auto& r : ffpnt::verify_proof_inequalities(q, cfg.n.hi, cfg.m.hi))
            push(r.family, r.q, r.n, r.m, r.pass);
        for (const auto& r : ffpnt::verify_wang_kan(q, cfg.n.hi))
            push(r.family, r.q, r.n, r.m, r.pass);
    }
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (const auto& r : ffpnt::verify_pollack(PrimePower::from_q(p), 8, 200))
            push(r.family, r.q, r.n, r.m, r.pass);
    }

    nlohmann::json summary;
    summary["checks"] = total;
    summary["failed"] = failed;
    write_output(cfg, t, &summary);
    std::cerr << "verify: " << total << " checks, " << failed << " failed\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monic irreducible polynomial counts over F_q: exact formula, "
                 "certified expansion, brute-force oracle and verification suites"};
    app.require_subcommand(1);

    struct SubOpts {
        CLI::App* sub = nullptr;
        std::string q, n, m, format = "csv", out;
        std::int64_t sqrt_slack = 1'000'000;
        std::int64_t oracle_budget = 10'000'000;
        std::string corrupt_sqrt_coeff, corrupt_bound_scale;
        bool has_m = false;
    };
    std::vector<SubOpts> subs(5);
    const char* names[5] = {"count", "expand", "verify", "oracle", "table"};
    const char* descs[5] = {"per-degree and cumulative exact counts",
                            "expansion terms, remainder and certified bound",
                            "run the verification suites; exit 1 on any failed check",
                            "brute-force enumeration vs the exact formula",
                            "long-format ratio dataset for plotting"};
    for (int i = 0; i < 5; ++i) {
        SubOpts& o = subs[i];
        o.sub = app.add_subcommand(names[i], descs[i]);
        bool is_verify = std::string(names[i]) == "verify";
        o.has_m = std::string(names[i]) == "expand" || std::string(names[i]) == "table" || is_verify;
        auto* qopt = o.sub->add_option("--q", o.q, "comma-separated prime powers, e.g. 2,3,4");
        auto* nopt = o.sub->add_option("--n", o.n, "degree range lo..hi (x = q^n)");
        if (o.has_m) {
            auto* mopt = o.sub->add_option("--m", o.m, "expansion order range lo..hi");
            if (is_verify)
                mopt->default_val("1..10");
            else
                mopt->required();
        }
        if (is_verify) {
            qopt->default_val("2,3,4,5,7,8,9,11,13,16");
            nopt->default_val("1..60");
        } else {
            qopt->required();
            nopt->required();
        }
        o.sub->add_option("--format", o.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        o.sub->add_option("--out", o.out, "output file (default: stdout)");
        o.sub->add_option("--sqrt-slack", o.sqrt_slack,
                          "denominator of the sqrt outward rounding slack")
            ->check(CLI::PositiveNumber);
        o.sub->add_option("--oracle-budget", o.oracle_budget,
                          "max q^n enumerated by the oracle")
            ->check(CLI::PositiveNumber);
        // test-harness hooks: deliberately corrupt the bound constants
        o.sub->add_option("--corrupt-sqrt-coeff", o.corrupt_sqrt_coeff)->group("");
        o.sub->add_option("--corrupt-bound-scale", o.corrupt_bound_scale)->group("");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        for (int i = 0; i < 5; ++i) {
            if (!subs[i].sub->parsed()) continue;
            const SubOpts& o = subs[i];
            RunConfig cfg;
            cfg.command = names[i];
            cfg.q_list = parse_q_list(o.q);
            cfg.n = parse_range(o.n, "n");
            if (o.has_m) cfg.m = parse_range(o.m, "m");
            cfg.format = o.format;
            cfg.out_path = o.out;
            cfg.sqrt_slack = o.sqrt_slack;
            cfg.oracle_budget = o.oracle_budget;
            if (!o.corrupt_sqrt_coeff.empty())
                cfg.constants.sqrt_coeff = parse_rational(o.corrupt_sqrt_coeff, "--corrupt-sqrt-coeff");
            if (!o.corrupt_bound_scale.empty())
                cfg.constants.scale = parse_rational(o.corrupt_bound_scale, "--corrupt-bound-scale");

            if (cfg.command == "count") return cmd_count(cfg);
            if (cfg.command == "expand") return cmd_expand(cfg);
            if (cfg.command == "verify") return cmd_verify(cfg);
            if (cfg.command == "oracle") return cmd_oracle(cfg);
            return cmd_table(cfg);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
