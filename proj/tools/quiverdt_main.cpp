// Command line driver. Subcommands:
//
//   kac     print the Kac polynomial table inside the dimension box
//   dt      print the DT invariant table, cross-checked against the
//           Steinberg route
//   verify  run the finite-field identity checks at one or more q and
//           print one report line per identity per parameter point
//   series  dump the counting series and the DT generating series as JSON
//
// Exit codes: 0 success, 1 a mathematical identity failed, 2 bad input.

#include "quiverdt/cyclotomic.hpp"
#include "quiverdt/dimvec.hpp"
#include "quiverdt/error.hpp"
#include "quiverdt/fq.hpp"
#include "quiverdt/glclasses.hpp"
#include "quiverdt/invariants.hpp"
#include "quiverdt/numtheory.hpp"
#include "quiverdt/oracle.hpp"
#include "quiverdt/partition.hpp"
#include "quiverdt/poly.hpp"
#include "quiverdt/quiver.hpp"
#include "quiverdt/ratfun.hpp"
#include "quiverdt/series.hpp"
#include "quiverdt/textio.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace quiverdt;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read quiver file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Inputs {
    Quiver g;
    DimVector v;
};

Inputs load_inputs(const std::string& quiver_path, const std::string& dim_arg) {
    Quiver g = quiver_from_json_text(read_file(quiver_path));
    DimVector v = parse_dims(dim_arg);
    if (static_cast<int>(v.size()) != g.vertices())
        throw input_error("dimension vector has " + std::to_string(v.size()) +
                          " entries but the quiver has " +
                          std::to_string(g.vertices()) + " vertices");
    return {std::move(g), std::move(v)};
}

// Admissibility for the character-theoretic checks: the multiplicative
// character needs order N = sum v_i, so N must divide q - 1.
std::vector<long> choose_q(const DimVector& v, const std::string& q_arg) {
    long n = dim_sum(v);
    if (n < 1) throw input_error("verification needs a nonzero dimension vector");
    if (q_arg == "auto") {
        for (long q = 2; q < 100000; ++q)
            if (is_prime(static_cast<int>(q)) && (q - 1) % n == 0)
                return {q};
        throw input_error("no admissible prime below 100000 for N = " +
                          std::to_string(n));
    }
    std::vector<long> qs;
    std::stringstream ss(q_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw input_error("empty entry in q list '" + q_arg + "'");
        item = item.substr(a, b - a + 1);
        if (item.empty() || item.size() > 6 ||
            item.find_first_not_of("0123456789") != std::string::npos)
            throw input_error("cannot parse q value '" + item + "'");
        qs.push_back(std::stol(item));
    }
    if (qs.empty()) throw input_error("empty q list");
    for (long q : qs) {
        if (!is_prime_power(q))
            throw input_error("q = " + std::to_string(q) + " is not a prime power");
        if ((q - 1) % n != 0)
            throw input_error("q = " + std::to_string(q) +
                              " is inadmissible for dimension vector " + dim_text(v) +
                              ": the total dimension " + std::to_string(n) +
                              " must divide q - 1");
    }
    return qs;
}

std::string mpq_text(const mpq_class& x) { return x.get_str(); }

json poly_json(const Poly& p) {
    json coeffs = json::array();
    for (const mpq_class& c : p.coeffs()) coeffs.push_back(c.get_str());
    return coeffs;
}

json ratfun_json(const RatFun& r) {
    json j;
    j["num"] = poly_json(r.num());
    j["den"] = poly_json(r.den());
    j["text"] = ratfun_text(r);
    return j;
}

json dims_json(const DimVector& v) {
    json j = json::array();
    for (int x : v) j.push_back(x);
    return j;
}

// One line of verify output. Parameters keep insertion order in text mode;
// the JSON object sorts its keys, which is fine for determinism.
struct Report {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string lhs;
    std::string rhs;
    bool pass = true;
    std::string note;
};

void print_reports_text(const std::vector<Report>& reports) {
    for (const Report& r : reports) {
        std::cout << r.identity;
        for (const auto& [k, val] : r.parameters) std::cout << " " << k << "=" << val;
        std::cout << "  lhs=" << r.lhs << " rhs=" << r.rhs << "  "
                  << (r.pass ? "pass" : "FAIL");
        if (!r.note.empty()) std::cout << "  [" << r.note << "]";
        std::cout << "\n";
    }
}

void print_reports_json(const std::vector<Report>& reports,
                        const DimVector& v, const std::vector<long>& qs) {
    json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["dim"] = dims_json(v);
    j["q"] = qs;
    json arr = json::array();
    for (const Report& r : reports) {
        json e;
        e["identity"] = r.identity;
        json params;
        for (const auto& [k, val] : r.parameters) params[k] = val;
        e["parameters"] = params;
        e["lhs"] = r.lhs;
        e["rhs"] = r.rhs;
        e["pass"] = r.pass;
        e["note"] = r.note;
        arr.push_back(e);
    }
    j["reports"] = arr;
    std::cout << j.dump(2) << "\n";
}

int cmd_table(const Inputs& in, const std::string& format, bool dt) {
    std::map<DimVector, Poly> table;
    if (dt) {
        table = dt_invariants(in.g, in.v);
        if (dt_via_steinberg(in.g, in.v) != table)
            throw math_error("Steinberg route disagrees with the generating "
                             "function route for the DT table");
    } else {
        table = kac_polynomials(in.g, in.v);
    }
    const char* label = dt ? "DT" : "A";
    if (format == "json") {
        json j;
        j["schema"] = 1;
        j["command"] = dt ? "dt" : "kac";
        j["dim"] = dims_json(in.v);
        json arr = json::array();
        for (const auto& [w, p] : table) {
            json e;
            e["w"] = dims_json(w);
            e["coeffs"] = poly_json(p);
            e["text"] = poly_text(p);
            arr.push_back(e);
        }
        j["table"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [w, p] : table)
            std::cout << label << " " << dim_text(w) << " = " << poly_text(p) << "\n";
    }
    return 0;
}

int cmd_series(const Inputs& in) {
    TruncatedSeries count = hua_series(in.g, in.v);
    TruncatedSeries dts = dt_generating_series(in.g, in.v);
    std::map<DimVector, std::pair<RatFun, RatFun>> box;
    for_each_below(in.v, [&](const DimVector& w) {
        box[w] = {count.coeff(w), dts.coeff(w)};
    });
    json j;
    j["schema"] = 1;
    j["command"] = "series";
    j["dim"] = dims_json(in.v);
    json arr = json::array();
    for (const auto& [w, pr] : box) {
        json e;
        e["w"] = dims_json(w);
        e["hua"] = ratfun_json(pr.first);
        e["dt"] = ratfun_json(pr.second);
        arr.push_back(e);
    }
    j["box"] = arr;
    std::cout << j.dump(2) << "\n";
    return 0;
}

std::string xi_text(const std::vector<int>& xi) { return dim_text(xi); }

// Orbit count of the group acting on the representation space, by summing
// fixed point counts over the group. Only called when the group fits the
// budget.
mpq_class burnside_orbits(const Quiver& g, const Fq& f, const DimVector& v,
                          long budget) {
    mpz_class total = 0;
    for (const GroupElement& x : enumerate_group(f, v, budget))
        total += fixed_count(g, f, x);
    return mpq_class(total) / group_order(f, v);
}

int cmd_verify(const Inputs& in, const std::string& q_spec, long budget,
               const std::string& format) {
    std::vector<long> qs = choose_q(in.v, q_spec);
    std::vector<Report> reports;

    // q independent: both dimension expressions agree (checked inside
    // variety_dim) and the dimension is even.
    for (const MultiPartition& mu : enumerate_multipartitions(in.v)) {
        VarietyDim d = variety_dim(in.g, in.v, mu);
        Report r;
        r.identity = "dims";
        r.parameters = {{"v", dim_text(in.v)}, {"mu", multipartition_text(mu)}};
        r.lhs = std::to_string(d.dimension);
        r.rhs = "even";
        r.pass = d.dimension % 2 == 0;
        reports.push_back(std::move(r));
    }

    std::map<DimVector, Poly> kac = kac_polynomials(in.g, in.v);
    std::map<DimVector, Poly> dt = dt_via_steinberg(in.g, in.v);

    for (long q : qs) {
        Fq f(q, 81);
        std::string qs_text = std::to_string(q);
        mpz_class gorder = group_order(f, in.v);
        bool element = gorder <= budget;
        GroupScope scope = element ? GroupScope::element_mode(f, in.v, budget)
                                   : GroupScope::class_mode(f, in.v, budget);

        for (const OmLine& line : verify_om(scope)) {
            Report r;
            r.identity = "om";
            r.parameters = {{"q", qs_text}, {"type", type_text(line.omega)}};
            r.lhs = cyclo_text(line.lhs);
            r.rhs = mpq_text(line.rhs);
            r.pass = line.pass;
            reports.push_back(std::move(r));
        }

        mpq_class mult_kac = multiplicity_oracle(in.g, scope, OracleTarget::kac);
        mpq_class mult_dt = multiplicity_oracle(in.g, scope, OracleTarget::dt);
        {
            Report r;
            r.identity = "mult kac";
            r.parameters = {{"q", qs_text}, {"v", dim_text(in.v)}};
            r.lhs = mpq_text(mult_kac);
            r.rhs = mpq_text(kac.at(in.v).eval(mpq_class(q)));
            r.pass = r.lhs == r.rhs;
            reports.push_back(std::move(r));
        }
        {
            Report r;
            r.identity = "mult steinberg";
            r.parameters = {{"q", qs_text}, {"v", dim_text(in.v)}};
            r.lhs = mpq_text(mult_dt);
            r.rhs = mpq_text(dt.at(in.v).eval(mpq_class(q)));
            r.pass = r.lhs == r.rhs;
            reports.push_back(std::move(r));
        }

        for (OracleTarget target : {OracleTarget::kac, OracleTarget::dt}) {
            bool is_dt = target == OracleTarget::dt;
            Report r;
            r.identity = is_dt ? "add dt" : "add kac";
            r.parameters = {{"q", qs_text}, {"v", dim_text(in.v)}};
            try {
                AdditiveSideResult a = additive_side(in.g, f, in.v, target, budget);
                r.parameters.push_back({"xi", xi_text(a.xi)});
                r.lhs = mpq_text(a.value);
                r.rhs = mpq_text(is_dt ? mult_dt : mult_kac);
                if (a.strict_xi) {
                    r.pass = r.lhs == r.rhs;
                } else {
                    // Without a kernel generic form the additive sum is not
                    // expected to equal the multiplicity, so the line is
                    // informational.
                    r.pass = true;
                    r.note = "relaxed form, equality not asserted";
                }
            } catch (const input_error& e) {
                r.lhs = "-";
                r.rhs = "-";
                r.pass = true;
                r.note = std::string("skipped: ") + e.what();
            }
            reports.push_back(std::move(r));
        }

        {
            std::map<DimVector, mpq_class> counts = total_count_series(in.g, in.v, q);
            Report r;
            r.identity = "count";
            r.parameters = {{"q", qs_text}, {"v", dim_text(in.v)}};
            r.lhs = mpq_text(counts.at(in.v));
            if (element) {
                r.rhs = mpq_text(burnside_orbits(in.g, f, in.v, budget));
                r.pass = r.lhs == r.rhs;
            } else {
                r.rhs = r.lhs;
                r.pass = true;
                r.note = "series routes only, orbit count skipped (group order " +
                         gorder.get_str() + " exceeds budget " +
                         std::to_string(budget) + ")";
            }
            reports.push_back(std::move(r));
        }
    }

    if (format == "json")
        print_reports_json(reports, in.v, qs);
    else
        print_reports_text(reports);

    for (const Report& r : reports)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kac polynomials, DT invariants, and finite field checks for quivers"};
    app.require_subcommand(1);

    std::string quiver_path, dim_arg;
    std::string q_spec = "auto";
    std::string format = "text";
    long budget = 200000;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--quiver", quiver_path, "quiver JSON file")->required();
        sub->add_option("--dim", dim_arg, "dimension vector, e.g. \"2,1\"")->required();
    };

    CLI::App* kac = app.add_subcommand("kac", "Kac polynomial table");
    add_common(kac);
    kac->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* dt = app.add_subcommand("dt", "DT invariant table");
    add_common(dt);
    dt->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "finite field identity checks");
    add_common(verify);
    verify->add_option("--q", q_spec, "auto or a comma separated list of prime powers");
    verify->add_option("--budget", budget, "enumeration budget");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* series = app.add_subcommand("series", "series coefficients as JSON");
    add_common(series);
    series->add_option("--format", format, "series output is always json")
        ->check(CLI::IsMember({"json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        Inputs in = load_inputs(quiver_path, dim_arg);
        if (app.got_subcommand(kac)) return cmd_table(in, format, false);
        if (app.got_subcommand(dt)) return cmd_table(in, format, true);
        if (app.got_subcommand(verify)) return cmd_verify(in, q_spec, budget, format);
        return cmd_series(in);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const math_error& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return 1;
    }
}
