// powersum: exact power-sum computation, congruence verification, search,
// and table/polynomial dumps with plain, JSON, and CSV output.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powersum/divisibility.hpp"
#include "powersum/faulhaber.hpp"
#include "powersum/identities.hpp"
#include "powersum/power_sums.hpp"
#include "powersum/special_numbers.hpp"

using json = nlohmann::ordered_json;
using namespace powersum;

namespace {

enum class OutputFormat { Plain, Json, Csv };

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStrictPrecondition = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OutputFormat parse_format(const std::string& name) {
    if (name == "plain") return OutputFormat::Plain;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw UsageError("unknown format '" + name + "' (expected plain|json|csv)");
}

BigInt parse_bigint(const std::string& text) {
    if (text.empty() || (!isdigit(static_cast<unsigned char>(text[0])) && text[0] != '-')) {
        throw UsageError("not an integer: '" + text + "'");
    }
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!isdigit(static_cast<unsigned char>(text[i]))) {
            throw UsageError("not an integer: '" + text + "'");
        }
    }
    return BigInt(text);
}

// "a..b" (inclusive) or a single integer.
std::pair<BigInt, BigInt> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        BigInt v = parse_bigint(text);
        return {v, v};
    }
    BigInt lo = parse_bigint(text.substr(0, dots));
    BigInt hi = parse_bigint(text.substr(dots + 2));
    if (lo > hi) {
        throw UsageError("empty range '" + text + "'");
    }
    return {lo, hi};
}

std::vector<BigInt> expand_range(const std::string& text) {
    auto [lo, hi] = parse_range(text);
    if (hi - lo > 1000000) {
        throw UsageError("range '" + text + "' is too large");
    }
    std::vector<BigInt> values;
    for (BigInt v = lo; v <= hi; ++v) {
        values.push_back(v);
    }
    return values;
}

std::string rational_to_string(const Rational& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1) {
        s += "/" + boost::multiprecision::denominator(r).str();
    }
    return s;
}

std::string params_to_string(const ReportParams& params) {
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) {
            out += " ";
        }
        out += name + "=" + value.str();
    }
    return out;
}

unsigned to_small_unsigned(const BigInt& v, const char* name) {
    if (v < 0 || v > 1000000) {
        throw std::domain_error(std::string(name) + " must lie in [0, 10^6]");
    }
    return v.convert_to<unsigned>();
}

json params_to_json(const ReportParams& params) {
    json obj = json::object();
    for (const auto& [name, value] : params) {
        obj[name] = value.str();
    }
    return obj;
}

// ---------------------------------------------------------------- verify --

// Uniform record for the three result shapes a claim can produce: a
// congruence report, an identity comparison, or the thm-4.11 iff pair.
struct VerifyRecord {
    std::string claim;
    ReportParams params;
    CheckStatus status = CheckStatus::Checked;
    bool holds = false;
    std::string note;
    std::optional<DivisibilityReport> report;
    std::optional<std::pair<std::string, std::string>> sides;  // lhs, rhs
    std::optional<std::pair<bool, bool>> iff;                  // predicted, actual
};

VerifyRecord from_report(DivisibilityReport r) {
    VerifyRecord record;
    record.claim = r.claim_id;
    record.params = r.params;
    record.status = r.status;
    record.holds = r.holds;
    record.note = r.note;
    if (r.status == CheckStatus::Checked) {
        record.report = std::move(r);
    }
    return record;
}

VerifyRecord identity_record(std::string claim, ReportParams params, const std::string& lhs,
                             const std::string& rhs) {
    VerifyRecord record;
    record.claim = std::move(claim);
    record.params = std::move(params);
    record.holds = lhs == rhs;
    record.sides = {lhs, rhs};
    return record;
}

using ParamMap = std::map<std::string, BigInt>;
using ClaimHandler = std::function<VerifyRecord(const ParamMap&)>;

struct ClaimSpec {
    std::vector<std::string> required;
    std::vector<std::string> optional;
    ClaimHandler handler;
};

ReportParams ordered_params(const ClaimSpec& spec, const ParamMap& values) {
    ReportParams params;
    for (const auto& name : spec.required) {
        params.emplace_back(name, values.at(name));
    }
    for (const auto& name : spec.optional) {
        if (auto it = values.find(name); it != values.end()) {
            params.emplace_back(name, it->second);
        }
    }
    return params;
}

const std::map<std::string, ClaimSpec>& claim_registry() {
    static const std::map<std::string, ClaimSpec> registry = [] {
        std::map<std::string, ClaimSpec> reg;

        reg["prop-3.3"] = {{"x", "y", "p"},
                           {},
                           [](const ParamMap& v) {
                               return from_report(check_prop_pxy(v.at("x"), v.at("y"), v.at("p")));
                           }};

        reg["prop-4.1"] = {{"x", "y", "m"}, {}, [](const ParamMap& v) {
                               const BigInt k = v.at("x") + v.at("y");
                               ReportParams params = {{"x", v.at("x")},
                                                      {"y", v.at("y")},
                                                      {"m", v.at("m")},
                                                      {"p", k}};
                               if (k < 3 || !is_prime(k)) {
                                   return from_report(failed_precondition(
                                       "prop-4.1", std::move(params),
                                       "x + y = " + k.str() + " must be a prime >= 3"));
                               }
                               auto report = check_mk_pair(v.at("x"), v.at("y"), v.at("m"), k);
                               report.claim_id = "prop-4.1";
                               return from_report(std::move(report));
                           }};

        reg["cor-4.2"] = {{"m", "p"}, {}, [](const ParamMap& v) {
                              if (v.at("p") < 3 || !is_prime(v.at("p"))) {
                                  return from_report(failed_precondition(
                                      "cor-4.2", {{"m", v.at("m")}, {"p", v.at("p")}},
                                      "p must be a prime >= 3"));
                              }
                              auto report = check_block(v.at("m"), v.at("p"));
                              report.claim_id = "cor-4.2";
                              return from_report(std::move(report));
                          }};

        reg["prop-4.3"] = {{"m", "p", "t"}, {}, [](const ParamMap& v) {
                               return from_report(
                                   check_prime_power_block(v.at("m"), v.at("p"), v.at("t")));
                           }};

        reg["prop-4.4"] = {{"x", "y"}, {"m"}, [](const ParamMap& v) {
                               BigInt m = 1;
                               if (auto it = v.find("m"); it != v.end()) {
                                   m = it->second;
                               }
                               return from_report(
                                   check_mk_pair(v.at("x"), v.at("y"), m, v.at("x") + v.at("y")));
                           }};

        reg["prop-4.5"] = {{"m", "k"}, {}, [](const ParamMap& v) {
                               return from_report(check_block(v.at("m"), v.at("k")));
                           }};

        reg["prop-4.6"] = {{"m", "k"}, {}, [](const ParamMap& v) {
                               return from_report(residue_even_m(v.at("m"), v.at("k")));
                           }};

        reg["cor-4.7"] = {{"l"}, {}, [](const ParamMap& v) {
                              return from_report(check_s2l3(v.at("l")));
                          }};

        reg["prop-4.8"] = {{"p", "l"}, {}, [](const ParamMap& v) {
                               return from_report(check_euler_block(v.at("p"), v.at("l")));
                           }};

        reg["cor-4.9"] = {{"p"}, {}, [](const ParamMap& v) {
                              return from_report(check_cor49(v.at("p")));
                          }};

        reg["prop-4.10"] = {{"n", "k"}, {}, [](const ParamMap& v) {
                                return from_report(check_k_mult_of_n(v.at("n"), v.at("k")));
                            }};

        reg["thm-4.11"] = {{"n", "k"}, {}, [](const ParamMap& v) {
                               auto [predicted, actual] = ds_predicate(v.at("n"), v.at("k"));
                               VerifyRecord record;
                               record.claim = "thm-4.11";
                               record.params = {{"n", v.at("n")}, {"k", v.at("k")}};
                               record.iff = {predicted, actual};
                               record.holds = predicted == actual;
                               return record;
                           }};

        reg["thm-4.12"] = {{"p", "alpha", "k"}, {}, [](const ParamMap& v) {
                               return from_report(check_prime_power_square(
                                   v.at("p"), v.at("alpha"), v.at("k")));
                           }};

        reg["thm-4.13"] = {{"p", "q", "k"}, {}, [](const ParamMap& v) {
                               return from_report(check_pq(v.at("p"), v.at("q"), v.at("k")));
                           }};

        reg["thm-3.1(ap)"] = {{"a", "d", "k"}, {}, [](const ParamMap& v) {
                                  return from_report(
                                      check_arith_prog(v.at("a"), v.at("d"), v.at("k")));
                              }};

        reg["prop-3.2"] = {{"p", "n", "x", "m"}, {}, [](const ParamMap& v) {
                               return from_report(check_shifted_prop(v.at("p"), v.at("n"),
                                                                     v.at("x"), v.at("m")));
                           }};

        reg["cor-4.13"] = {{"n", "k"}, {}, [](const ParamMap& v) {
                               return from_report(check_integrality(v.at("n"), v.at("k")));
                           }};

        reg["cor-5.2"] = {{"p"}, {}, [](const ParamMap& v) {
                              return from_report(check_sp_p(v.at("p")));
                          }};

        reg["gw-power"] = {{"x", "y", "n"}, {}, [](const ParamMap& v) {
                               const unsigned n = to_small_unsigned(v.at("n"), "n");
                               const BigInt lhs = pow_int(v.at("x"), n) + pow_int(v.at("y"), n);
                               const BigInt rhs = gw_power_sum_rhs(v.at("x"), v.at("y"), n);
                               return identity_record(
                                   "gw-power",
                                   {{"x", v.at("x")}, {"y", v.at("y")}, {"n", v.at("n")}},
                                   lhs.str(), rhs.str());
                           }};

        reg["gw-binet"] = {{"x", "y", "n"}, {}, [](const ParamMap& v) {
                               const unsigned n = to_small_unsigned(v.at("n"), "n");
                               const BigInt x = v.at("x");
                               const BigInt y = v.at("y");
                               if (x == y) {
                                   throw std::domain_error("x and y must be distinct");
                               }
                               const BigInt lhs =
                                   (pow_int(x, n + 1) - pow_int(y, n + 1)) / (x - y);
                               const BigInt rhs = gw_binet_rhs(x, y, n);
                               return identity_record("gw-binet",
                                                      {{"x", x}, {"y", y}, {"n", v.at("n")}},
                                                      lhs.str(), rhs.str());
                           }};

        reg["gw-zero"] = {{"x", "y", "n"}, {"z"}, [](const ParamMap& v) {
                              const unsigned n = to_small_unsigned(v.at("n"), "n");
                              const BigInt x = v.at("x");
                              const BigInt y = v.at("y");
                              BigInt z = -x - y;
                              if (auto it = v.find("z"); it != v.end()) {
                                  z = it->second;
                              }
                              const BigInt lhs = gw_zero_sum_lhs(x, y, z, n);
                              const BigInt rhs = gw_zero_sum_rhs(x, y, z, n);
                              return identity_record(
                                  "gw-zero", {{"x", x}, {"y", y}, {"z", z}, {"n", v.at("n")}},
                                  lhs.str(), rhs.str());
                          }};

        reg["gw-general"] = {{"x", "y", "a0", "a1", "n"}, {}, [](const ParamMap& v) {
                                 const unsigned n = to_small_unsigned(v.at("n"), "n");
                                 auto [lhs, rhs] = gw_general_binet_lhs_rhs(
                                     v.at("x"), v.at("y"), v.at("a0"), v.at("a1"), n);
                                 return identity_record("gw-general",
                                                        {{"x", v.at("x")},
                                                         {"y", v.at("y")},
                                                         {"a0", v.at("a0")},
                                                         {"a1", v.at("a1")},
                                                         {"n", v.at("n")}},
                                                        rational_to_string(lhs),
                                                        rational_to_string(rhs));
                             }};
        return reg;
    }();
    return registry;
}

std::string verify_plain_line(const VerifyRecord& r) {
    std::ostringstream out;
    out << r.claim;
    if (!r.params.empty()) {
        out << " " << params_to_string(r.params);
    }
    out << ": ";
    if (r.status == CheckStatus::PreconditionFailed) {
        out << "precondition failed (" << r.note << ")";
        return out.str();
    }
    if (r.report) {
        out << "modulus=" << r.report->modulus.str()
            << " residue=" << r.report->computed_residue.str()
            << " predicted=" << r.report->predicted_residue.str();
    } else if (r.sides) {
        out << "lhs=" << r.sides->first << " rhs=" << r.sides->second;
    } else if (r.iff) {
        out << "predicted=" << (r.iff->first ? "true" : "false")
            << " actual=" << (r.iff->second ? "true" : "false");
    }
    out << (r.holds ? " -> holds" : " -> FAIL");
    if (!r.note.empty()) {
        out << "  [" << r.note << "]";
    }
    return out.str();
}

json verify_record_to_json(const VerifyRecord& r) {
    json obj;
    obj["claim"] = r.claim;
    obj["params"] = params_to_json(r.params);
    if (r.report) {
        obj["modulus"] = r.report->modulus.str();
        obj["residue"] = r.report->computed_residue.str();
        obj["predicted"] = r.report->predicted_residue.str();
    }
    if (r.sides) {
        obj["lhs"] = r.sides->first;
        obj["rhs"] = r.sides->second;
    }
    if (r.iff) {
        obj["predicted"] = r.iff->first;
        obj["actual"] = r.iff->second;
    }
    obj["holds"] = r.holds;
    obj["status"] = r.status == CheckStatus::Checked ? "checked" : "precondition-failed";
    if (!r.note.empty()) {
        obj["note"] = r.note;
    }
    return obj;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

int run_verify(const std::string& claim, const std::map<std::string, std::string>& raw_params,
               bool strict, OutputFormat format) {
    const auto& registry = claim_registry();
    const auto found = registry.find(claim);
    if (found == registry.end()) {
        std::string known;
        for (const auto& [name, spec] : registry) {
            known += known.empty() ? name : ", " + name;
        }
        throw UsageError("unknown claim '" + claim + "' (known: " + known + ")");
    }
    const ClaimSpec& spec = found->second;

    std::vector<std::string> names;
    std::vector<std::vector<BigInt>> axes;
    for (const auto& name : spec.required) {
        const auto it = raw_params.find(name);
        if (it == raw_params.end()) {
            throw UsageError("claim '" + claim + "' requires --" + name);
        }
        names.push_back(name);
        axes.push_back(expand_range(it->second));
    }
    for (const auto& name : spec.optional) {
        const auto it = raw_params.find(name);
        if (it != raw_params.end()) {
            names.push_back(name);
            axes.push_back(expand_range(it->second));
        }
    }
    for (const auto& [name, value] : raw_params) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw UsageError("claim '" + claim + "' does not take --" + name);
        }
    }

    // Cartesian product over the parameter axes, last axis fastest.
    std::vector<VerifyRecord> records;
    std::vector<std::size_t> index(axes.size(), 0);
    bool done = false;
    while (!done) {
        ParamMap values;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            values.emplace(names[i], axes[i][index[i]]);
        }
        try {
            records.push_back(spec.handler(values));
        } catch (const std::domain_error& e) {
            VerifyRecord record;
            record.claim = claim;
            record.params = ordered_params(spec, values);
            record.status = CheckStatus::PreconditionFailed;
            record.note = e.what();
            records.push_back(std::move(record));
        }
        done = true;
        for (std::size_t axis = axes.size(); axis-- > 0;) {
            if (++index[axis] < axes[axis].size()) {
                done = false;
                break;
            }
            index[axis] = 0;
        }
    }

    std::size_t held = 0, failed = 0, preconditions = 0;
    for (const auto& r : records) {
        if (r.status == CheckStatus::PreconditionFailed) {
            ++preconditions;
        } else if (r.holds) {
            ++held;
        } else {
            ++failed;
        }
    }

    switch (format) {
        case OutputFormat::Plain: {
            for (const auto& r : records) {
                std::cout << verify_plain_line(r) << "\n";
            }
            std::cout << "summary: " << records.size() << " checked, " << held << " hold, "
                      << failed << " fail, " << preconditions << " precondition-failed\n";
            break;
        }
        case OutputFormat::Json: {
            json doc;
            doc["command"] = "verify";
            doc["claim"] = claim;
            doc["results"] = json::array();
            for (const auto& r : records) {
                doc["results"].push_back(verify_record_to_json(r));
            }
            doc["summary"] = {{"total", records.size()},
                              {"holds", held},
                              {"failed", failed},
                              {"precondition_failed", preconditions}};
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::Csv: {
            std::cout << "claim,params,modulus,residue,predicted,lhs,rhs,holds,status,note\n";
            for (const auto& r : records) {
                const bool checked = r.status == CheckStatus::Checked;
                std::cout << csv_escape(r.claim) << "," << csv_escape(params_to_string(r.params))
                          << "," << (r.report ? r.report->modulus.str() : "") << ","
                          << (r.report ? r.report->computed_residue.str() : "") << ","
                          << (r.report ? r.report->predicted_residue.str() : "") << ","
                          << (r.sides ? csv_escape(r.sides->first) : "") << ","
                          << (r.sides ? csv_escape(r.sides->second) : "") << ","
                          << (checked ? (r.holds ? "true" : "false") : "") << ","
                          << (checked ? "checked" : "precondition-failed") << ","
                          << csv_escape(r.note) << "\n";
            }
            break;
        }
    }

    if (failed > 0) {
        return kExitMathFailure;
    }
    if (strict && preconditions > 0) {
        return kExitStrictPrecondition;
    }
    return kExitOk;
}

// ------------------------------------------------------------------- sum --

int run_sum(const std::string& n_text, unsigned k, const std::string& algo,
            const std::string& mod_text, OutputFormat format) {
    const BigInt n = parse_bigint(n_text);
    std::optional<BigInt> modulus;
    if (!mod_text.empty()) {
        modulus = parse_bigint(mod_text);
        if (*modulus < 1) {
            throw UsageError("--mod must be >= 1");
        }
    }

    std::vector<SumAlgorithm> algorithms;
    if (algo == "all") {
        for (SumAlgorithm a : kAllSumAlgorithms) {
            if (k == 0 && (a == SumAlgorithm::StirlingA || a == SumAlgorithm::StirlingB ||
                           a == SumAlgorithm::Hsu)) {
                continue;  // defined only for k >= 1
            }
            algorithms.push_back(a);
        }
    } else {
        const auto parsed = parse_algorithm(algo);
        if (!parsed) {
            throw UsageError("unknown algorithm '" + algo +
                             "' (naive|bernoulli1|bernoulli2|stirling-a|stirling-b|hsu|all)");
        }
        algorithms.push_back(*parsed);
    }

    // Agreement is judged on the exact values; --mod only reduces the display.
    std::vector<BigInt> exact;
    for (SumAlgorithm a : algorithms) {
        exact.push_back(sum_powers(n, k, a));
    }
    bool agree = true;
    for (const BigInt& value : exact) {
        agree = agree && value == exact.front();
    }
    std::vector<std::pair<std::string, BigInt>> results;
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
        results.emplace_back(std::string(algorithm_name(algorithms[i])),
                             modulus ? mod_canonical(exact[i], *modulus) : exact[i]);
    }

    switch (format) {
        case OutputFormat::Plain:
            if (results.size() == 1) {
                std::cout << results.front().second.str() << "\n";
            } else {
                for (const auto& [name, value] : results) {
                    std::cout << name << " " << value.str() << "\n";
                }
                std::cout << (agree ? "all algorithms agree" : "ALGORITHMS DISAGREE") << "\n";
            }
            break;
        case OutputFormat::Json: {
            json doc;
            doc["command"] = "sum";
            doc["n"] = n.str();
            doc["k"] = k;
            if (modulus) {
                doc["mod"] = modulus->str();
            }
            doc["results"] = json::array();
            for (const auto& [name, value] : results) {
                doc["results"].push_back({{"algorithm", name}, {"value", value.str()}});
            }
            doc["agree"] = agree;
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::Csv:
            std::cout << "algorithm,value\n";
            for (const auto& [name, value] : results) {
                std::cout << name << "," << value.str() << "\n";
            }
            break;
    }
    return agree ? kExitOk : kExitMathFailure;
}

// ----------------------------------------------------------------- search --

std::vector<BigInt> search_n_values(const std::string& n_text, const std::string& family,
                                    const std::string& range_text) {
    if (!n_text.empty() && !family.empty()) {
        throw UsageError("--n and --n-family are mutually exclusive");
    }
    if (!n_text.empty()) {
        return expand_range(n_text);
    }
    if (family.empty()) {
        throw UsageError("one of --n or --n-family is required");
    }
    // Family pattern "<c>n<+b|-b>", e.g. "6n+1" or "30n+1".
    const auto n_pos = family.find('n');
    if (n_pos == std::string::npos || n_pos == 0) {
        throw UsageError("family must look like '6n+1', got '" + family + "'");
    }
    const BigInt scale = parse_bigint(family.substr(0, n_pos));
    BigInt offset = 0;
    if (n_pos + 1 < family.size()) {
        std::string tail = family.substr(n_pos + 1);
        if (tail[0] == '+') {
            tail = tail.substr(1);
        }
        offset = parse_bigint(tail);
    }
    if (range_text.empty()) {
        throw UsageError("--n-family requires --range a..b");
    }
    std::vector<BigInt> values;
    for (const BigInt& i : expand_range(range_text)) {
        BigInt n = scale * i + offset;
        if (n < 1) {
            throw UsageError("family index " + i.str() + " yields n = " + n.str() + " < 1");
        }
        values.push_back(std::move(n));
    }
    return values;
}

int run_search(const std::string& n_text, const std::string& family,
               const std::string& range_text, const std::string& k_text, bool odd_only,
               unsigned jobs, OutputFormat format) {
    const auto [k_lo_big, k_hi_big] = parse_range(k_text);
    if (k_lo_big < 1 || k_hi_big > 1000000) {
        throw UsageError("--k range must lie in [1, 1000000]");
    }
    const unsigned k_lo = k_lo_big.convert_to<unsigned>();
    const unsigned k_hi = k_hi_big.convert_to<unsigned>();

    std::vector<SearchResult> results;
    for (const BigInt& n : search_n_values(n_text, family, range_text)) {
        results.push_back(search_k(n, k_lo, k_hi, odd_only, jobs));
    }

    switch (format) {
        case OutputFormat::Plain:
            for (const auto& r : results) {
                std::cout << "n=" << r.n.str() << " modulus=" << r.modulus.str() << " k=";
                for (std::size_t i = 0; i < r.passing_k.size(); ++i) {
                    std::cout << (i ? "," : "") << r.passing_k[i];
                }
                std::cout << "\n";
            }
            break;
        case OutputFormat::Json: {
            json doc;
            doc["command"] = "search";
            doc["k_lo"] = k_lo;
            doc["k_hi"] = k_hi;
            doc["odd_only"] = odd_only;
            doc["results"] = json::array();
            for (const auto& r : results) {
                json entry;
                entry["n"] = r.n.str();
                entry["modulus"] = r.modulus.str();
                entry["passing_k"] = r.passing_k;
                doc["results"].push_back(std::move(entry));
            }
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::Csv: {
            std::cout << "n,modulus,k_lo,k_hi,odd_only,passing_k\n";
            for (const auto& r : results) {
                std::cout << r.n.str() << "," << r.modulus.str() << "," << r.k_lo << ","
                          << r.k_hi << "," << (r.odd_only ? "true" : "false") << ",";
                for (std::size_t i = 0; i < r.passing_k.size(); ++i) {
                    std::cout << (i ? ";" : "") << r.passing_k[i];
                }
                std::cout << "\n";
            }
            break;
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------ table/poly --

int run_table_bernoulli(unsigned upto, const std::string& convention_name, OutputFormat format) {
    BernoulliConvention convention;
    if (convention_name == "first") {
        convention = BernoulliConvention::FirstKind;
    } else if (convention_name == "second") {
        convention = BernoulliConvention::SecondKind;
    } else {
        throw UsageError("--convention must be first|second");
    }
    std::vector<Rational> values;
    for (unsigned l = 0; l <= upto; ++l) {
        values.push_back(bernoulli(l, convention));
    }
    switch (format) {
        case OutputFormat::Plain:
            for (unsigned l = 0; l <= upto; ++l) {
                std::cout << "B_" << l << " = " << rational_to_string(values[l]) << "\n";
            }
            break;
        case OutputFormat::Json: {
            json doc;
            doc["command"] = "table";
            doc["table"] = "bernoulli";
            doc["convention"] = convention_name;
            doc["values"] = json::array();
            for (const auto& v : values) {
                doc["values"].push_back(rational_to_string(v));
            }
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::Csv:
            std::cout << "index,value\n";
            for (unsigned l = 0; l <= upto; ++l) {
                std::cout << l << "," << rational_to_string(values[l]) << "\n";
            }
            break;
    }
    return kExitOk;
}

int run_table_stirling(unsigned n, OutputFormat format) {
    switch (format) {
        case OutputFormat::Plain:
            for (unsigned row = 0; row <= n; ++row) {
                const auto values = stirling2_row(row);
                for (std::size_t k = 0; k < values.size(); ++k) {
                    std::cout << (k ? " " : "") << values[k].str();
                }
                std::cout << "\n";
            }
            break;
        case OutputFormat::Json: {
            json doc;
            doc["command"] = "table";
            doc["table"] = "stirling2";
            doc["rows"] = json::array();
            for (unsigned row = 0; row <= n; ++row) {
                json row_json = json::array();
                for (const auto& v : stirling2_row(row)) {
                    row_json.push_back(v.str());
                }
                doc["rows"].push_back(std::move(row_json));
            }
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::Csv:
            std::cout << "n,k,value\n";
            for (unsigned row = 0; row <= n; ++row) {
                const auto values = stirling2_row(row);
                for (std::size_t k = 0; k < values.size(); ++k) {
                    std::cout << row << "," << k << "," << values[k].str() << "\n";
                }
            }
            break;
    }
    return kExitOk;
}

int run_poly(unsigned k, const std::string& basis, OutputFormat format) {
    Polynomial poly = faulhaber_polynomial(k);
    if (basis == "t") {
        poly = to_triangular_basis(poly);
    } else if (basis != "n") {
        throw UsageError("--basis must be n|t");
    }
    switch (format) {
        case OutputFormat::Plain:
            std::cout << polynomial_to_string(poly) << "\n";
            break;
        case OutputFormat::Json: {
            // Machine format: a bare JSON array of "num/den" strings, index = degree.
            json doc = json::array();
            for (const auto& c : poly.coeffs) {
                doc.push_back(boost::multiprecision::numerator(c).str() + "/" +
                              boost::multiprecision::denominator(c).str());
            }
            std::cout << doc.dump() << "\n";
            break;
        }
        case OutputFormat::Csv:
            std::cout << "degree,coefficient\n";
            for (std::size_t d = 0; d < poly.coeffs.size(); ++d) {
                std::cout << d << "," << rational_to_string(poly.coeffs[d]) << "\n";
            }
            break;
    }
    return kExitOk;
}

// ------------------------------------------------------------------ bench --

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
    std::vector<unsigned> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const BigInt v = parse_bigint(item);
        if (v < 0) {
            throw UsageError("expected nonnegative integers in list '" + text + "'");
        }
        values.push_back(v.convert_to<unsigned>());
    }
    if (values.empty()) {
        throw UsageError("empty list '" + text + "'");
    }
    return values;
}

int run_bench(const std::string& n_list, const std::string& k_list, unsigned reps) {
    const auto ns = parse_unsigned_list(n_list);
    const auto ks = parse_unsigned_list(k_list);
    if (reps == 0) {
        throw UsageError("--reps must be >= 1");
    }
    std::cout << "timings in microseconds (best of " << reps << " runs)\n";
    std::cout << std::setw(7) << "n" << std::setw(6) << "k";
    for (SumAlgorithm a : kAllSumAlgorithms) {
        std::cout << " " << std::setw(11) << algorithm_name(a);
    }
    std::cout << "\n";
    for (unsigned n : ns) {
        for (unsigned k : ks) {
            std::cout << std::setw(7) << n << std::setw(6) << k;
            const BigInt reference = sum_powers(n, k, SumAlgorithm::Naive);
            for (SumAlgorithm a : kAllSumAlgorithms) {
                if (k == 0 && (a == SumAlgorithm::StirlingA || a == SumAlgorithm::StirlingB ||
                               a == SumAlgorithm::Hsu)) {
                    std::cout << " " << std::setw(11) << "-";
                    continue;
                }
                long long best = -1;
                BigInt value;
                for (unsigned r = 0; r < reps; ++r) {
                    const auto start = std::chrono::steady_clock::now();
                    value = sum_powers(n, k, a);
                    const auto stop = std::chrono::steady_clock::now();
                    const auto us =
                        std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
                            .count();
                    if (best < 0 || us < best) {
                        best = us;
                    }
                }
                if (value != reference) {
                    std::cout << "\nALGORITHMS DISAGREE at n=" << n << " k=" << k << "\n";
                    return kExitMathFailure;
                }
                std::cout << " " << std::setw(11) << best;
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact power sums, Faulhaber polynomials, and congruence verification"};
    app.require_subcommand(1);
    // Let --format appear after the subcommand as well as before it.
    app.fallthrough();

    std::string format_name = "plain";
    app.add_option("--format", format_name, "Output format: plain|json|csv")
        ->capture_default_str();

    // sum
    auto* sum_cmd = app.add_subcommand("sum", "Compute S_k(n) = 1^k + ... + n^k");
    std::string sum_n, sum_algo = "naive", sum_mod;
    unsigned sum_k = 0;
    sum_cmd->add_option("--n", sum_n, "Upper limit n (decimal)")->required();
    sum_cmd->add_option("--k", sum_k, "Exponent k")->required();
    sum_cmd->add_option("--algo", sum_algo,
                        "naive|bernoulli1|bernoulli2|stirling-a|stirling-b|hsu|all")
        ->capture_default_str();
    sum_cmd->add_option("--mod", sum_mod, "Reduce the result modulo this value");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a claim over parameter ranges");
    std::string verify_claim;
    bool verify_strict = false;
    verify_cmd->add_option("claim", verify_claim, "Claim id, e.g. prop-4.5 or thm-4.13")
        ->required();
    verify_cmd->add_flag("--strict", verify_strict,
                         "Exit 3 when any check was skipped for a failed precondition");
    const std::vector<std::string> param_names = {"x", "y", "z",     "p", "q", "m", "k", "n",
                                                  "t", "l", "alpha", "a", "d", "a0", "a1"};
    std::map<std::string, std::string> verify_params;
    for (const auto& name : param_names) {
        verify_cmd->add_option("--" + name, verify_params[name], "Value or inclusive range a..b");
    }

    // search
    auto* search_cmd =
        app.add_subcommand("search", "Find k with S_k(n) == 0 mod n^2 over a k range");
    std::string search_n, search_family, search_range, search_k_text;
    bool search_odd_only = false;
    unsigned search_jobs = 0;
    search_cmd->add_option("--n", search_n, "n value or range a..b");
    search_cmd->add_option("--n-family", search_family, "Family like 6n+1 (with --range)");
    search_cmd->add_option("--range", search_range, "Family index range a..b");
    search_cmd->add_option("--k", search_k_text, "k range a..b")->required();
    search_cmd->add_flag("--odd-only", search_odd_only, "Only odd k");
    search_cmd->add_option("--jobs", search_jobs, "Worker threads (default: POWERSUM_JOBS or 1)");

    // table
    auto* table_cmd = app.add_subcommand("table", "Dump special-number tables");
    table_cmd->require_subcommand(1);
    auto* bern_cmd = table_cmd->add_subcommand("bernoulli", "Bernoulli numbers 0..L");
    unsigned bern_upto = 0;
    std::string bern_convention = "first";
    bern_cmd->add_option("--upto", bern_upto, "Largest index")->required();
    bern_cmd->add_option("--convention", bern_convention, "first|second")->capture_default_str();
    auto* stir_cmd = table_cmd->add_subcommand("stirling2", "Stirling triangle rows 0..N");
    unsigned stir_n = 0;
    stir_cmd->add_option("--n", stir_n, "Largest row")->required();

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "Faulhaber polynomial of S_k");
    unsigned poly_k = 0;
    std::string poly_basis = "n";
    poly_cmd->add_option("--k", poly_k, "Exponent k")->required();
    poly_cmd->add_option("--basis", poly_basis, "n (power basis) or t (triangular basis)")
        ->capture_default_str();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Time the sum_powers algorithms on a grid");
    std::string bench_n = "50,100,200", bench_k = "5,10,15,20";
    unsigned bench_reps = 3;
    bench_cmd->add_option("--n", bench_n, "Comma-separated n values")->capture_default_str();
    bench_cmd->add_option("--k", bench_k, "Comma-separated k values")->capture_default_str();
    bench_cmd->add_option("--reps", bench_reps, "Repetitions per cell")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const OutputFormat format = parse_format(format_name);
        if (sum_cmd->parsed()) {
            return run_sum(sum_n, sum_k, sum_algo, sum_mod, format);
        }
        if (verify_cmd->parsed()) {
            std::map<std::string, std::string> provided;
            for (const auto& [name, value] : verify_params) {
                if (!value.empty()) {
                    provided[name] = value;
                }
            }
            return run_verify(verify_claim, provided, verify_strict, format);
        }
        if (search_cmd->parsed()) {
            unsigned jobs = search_jobs;
            if (jobs == 0) {
                if (const char* env = std::getenv("POWERSUM_JOBS")) {
                    jobs = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
                }
            }
            if (jobs == 0) {
                jobs = 1;
            }
            return run_search(search_n, search_family, search_range, search_k_text,
                              search_odd_only, jobs, format);
        }
        if (bern_cmd->parsed()) {
            return run_table_bernoulli(bern_upto, bern_convention, format);
        }
        if (stir_cmd->parsed()) {
            return run_table_stirling(stir_n, format);
        }
        if (poly_cmd->parsed()) {
            return run_poly(poly_k, poly_basis, format);
        }
        if (bench_cmd->parsed()) {
            return run_bench(bench_n, bench_k, bench_reps);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitOk;
}
