#include "gorenstein/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gorenstein/bounds.hpp"
#include "gorenstein/catalog.hpp"
#include "gorenstein/errors.hpp"
#include "gorenstein/lefschetz.hpp"

namespace gorenstein {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kTextListLimit = 8;

struct Config {
    std::string field = "fp";
    std::optional<std::uint64_t> seed;
    int trials = 5;
    std::optional<std::size_t> n;
    bool json = false;
    int threads = 1;
    std::string input_path;
};

Field parse_field(const std::string& text) {
    if (text == "q" || text == "Q") return Field::rational();
    if (text == "fp") return Field::prime();
    if (text.rfind("fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("malformed prime in --field " + text);
        std::uint64_t p = 0;
        try {
            p = std::stoull(digits);
        } catch (const std::out_of_range&) {
            throw InputError("prime in --field " + text + " is out of range");
        }
        return Field::prime(p);
    }
    throw InputError("--field must be q, fp or fp:PRIME, got '" + text + "'");
}

std::uint64_t require_seed(const Config& c, const std::string& cmd) {
    if (!c.seed) throw InputError(cmd + " is randomized; pass --seed INT");
    return *c.seed;
}

std::string read_input(const Config& c, const std::string& positional, const std::string& what) {
    if (!c.input_path.empty()) {
        if (!positional.empty()) throw InputError("give the " + what + " either as an argument or via --input, not both");
        std::ifstream in(c.input_path);
        if (!in) throw InputError("cannot read --input file " + c.input_path);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string s = ss.str();
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        return s;
    }
    if (positional.empty()) throw InputError("missing " + what + " (argument or --input PATH)");
    return positional;
}

std::size_t resolve_nvars(const Config& c, std::string_view text) {
    std::size_t inferred = std::max<std::size_t>(max_variable_index(text), 1);
    if (c.n) {
        if (*c.n < 1) throw InputError("--n must be positive");
        return *c.n;
    }
    return inferred;
}

DualForm read_form(const Config& c, const std::string& positional, const Field& f) {
    std::string text = read_input(c, positional, "form");
    return DualForm(parse_poly(text, resolve_nvars(c, text), f));
}

json big(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json expansion_json(const BinomialExpansion& e) {
    json parts = json::array();
    for (const auto& [nk, k] : e.parts) parts.push_back({nk, k});
    return parts;
}

std::string monomial_text(const Exponent& e) {
    return format_poly(Poly::monomial(Field::rational(), e, Scalar(Field::rational(), 1)), 'x');
}

std::string verdict_text(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "Holds";
        case Verdict::Fails: return "FailsAtDegrees";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

json lefschetz_json(const LefschetzReport& r, bool strong) {
    json out;
    out["verdict"] = verdict_text(r.verdict);
    out["h_vector"] = r.h.entries();
    if (strong) {
        json maps = json::array();
        for (int k : r.failing) maps.push_back({{"degree", r.records[k].degree}, {"power", r.records[k].power}});
        out["failing_maps"] = maps;
    } else {
        out["failing_degrees"] = r.failing;
    }
    json recs = json::array();
    for (const auto& x : r.records)
        recs.push_back({{"degree", x.degree}, {"power", x.power}, {"expected", x.expected}, {"achieved", x.achieved}});
    out["records"] = recs;
    out["trials_requested"] = r.trials_requested;
    out["trials_used"] = r.trials_used;
    out["certificate_trial"] = r.certificate_trial ? json(*r.certificate_trial) : json(nullptr);
    out["seed"] = r.seed;
    return out;
}

json hf_json(const DualForm& f, int threads) {
    HVector h = hilbert_function(f, threads);
    json out;
    out["form"] = format_poly(f.form());
    out["nvars"] = f.nvars();
    out["h_vector"] = h.entries();
    out["socle_degree"] = h.socle_degree();
    out["sperner_number"] = h.sperner_number();
    out["symmetric"] = h.is_symmetric();
    out["o_sequence"] = is_o_sequence(h).valid;
    return out;
}

std::string class_name(const std::vector<long>& hf) {
    if (hf == std::vector<long>{1, 4, 6, 6, 6, 6}) return "(1,4,6,6,6,...)";
    if (hf == std::vector<long>{1, 4, 6, 7, 8, 9}) return "(1,4,6,7,8,9,...)";
    if (hf == std::vector<long>{1, 4, 6, 8, 10, 12}) return "(1,4,6,8,10,...)";
    return "other";
}

std::vector<long> expected_class(OrbitLabel l) {
    switch (l) {
        case OrbitLabel::V:
        case OrbitLabel::VI: return {1, 4, 6, 7, 8, 9};
        case OrbitLabel::I:
        case OrbitLabel::VII:
        case OrbitLabel::IX:
        case OrbitLabel::X: return {1, 4, 6, 8, 10, 12};
        default: return {1, 4, 6, 6, 6, 6};
    }
}

json catalog_entry(OrbitLabel l, const Field& f) {
    QuadricWeb w = orbit_representative(l, f);
    std::vector<long> hf = quadric_ideal_hf(w, 5);
    if (hf != expected_class(l)) throw InvariantError("catalog entry " + to_string(l) + " has an unexpected Hilbert function");
    json e;
    e["label"] = to_string(l);
    e["generators"] = format_web(w);
    e["hilbert_function"] = hf;
    e["hilbert_class"] = class_name(hf);
    return e;
}

json gin_json(const Gin2Result& g) {
    json out;
    json mons = json::array();
    for (const auto& e : g.monomials) mons.push_back(monomial_text(e));
    out["monomials"] = mons;
    out["set"] = g.monomials == generic_gin2_set()   ? "generic"
                 : g.monomials == special_gin2_set() ? "special"
                                                     : "other";
    out["trials"] = g.trials;
    out["agreeing_trials"] = g.agreeing_trials;
    out["seed"] = g.seed;
    return out;
}

// ---- text rendering -------------------------------------------------------

std::string seq(const json& a) {
    std::string s = "(";
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k) s += ", ";
        s += a[k].dump();
    }
    return s + ")";
}

void text_list(std::ostream& os, const json& items, const std::string& indent) {
    std::size_t shown = std::min(items.size(), kTextListLimit);
    for (std::size_t k = 0; k < shown; ++k) os << indent << items[k].get<std::string>() << '\n';
    if (items.size() > shown) os << indent << "... " << items.size() - shown << " more (use --json)\n";
}

void text_hf(std::ostream& os, const json& r) {
    os << "h-vector: " << seq(r["h_vector"]) << '\n'
       << "socle degree: " << r["socle_degree"] << '\n'
       << "Sperner number: " << r["sperner_number"] << '\n'
       << "symmetric: " << (r["symmetric"].get<bool>() ? "yes" : "no") << '\n';
}

void text_lefschetz(std::ostream& os, const json& r) {
    os << "h-vector: " << seq(r["h_vector"]) << '\n';
    os << "verdict: " << r["verdict"].get<std::string>();
    if (r.contains("failing_degrees") && !r["failing_degrees"].empty()) os << ' ' << r["failing_degrees"].dump();
    if (r.contains("failing_maps") && !r["failing_maps"].empty()) {
        os << " (";
        bool first = true;
        for (const auto& m : r["failing_maps"]) {
            os << (first ? "" : ", ") << "x l^" << m["power"] << " from degree " << m["degree"];
            first = false;
        }
        os << ')';
    }
    os << '\n';
    const auto& recs = r["records"];
    if (recs.size() <= 3 * kTextListLimit) {
        os << "  degree  power  expected  achieved\n";
        for (const auto& x : recs)
            os << "  " << std::setw(6) << x["degree"].get<int>() << "  " << std::setw(5) << x["power"].get<int>() << "  "
               << std::setw(8) << x["expected"].get<long>() << "  " << std::setw(8) << x["achieved"].get<long>() << '\n';
    } else {
        os << "  " << recs.size() << " rank records (use --json)\n";
    }
    os << "trials: " << r["trials_used"] << " of " << r["trials_requested"] << ", seed " << r["seed"];
    if (!r["certificate_trial"].is_null()) os << ", certificate trial " << r["certificate_trial"];
    os << '\n';
}

// ---- commands ------------------------------------------------------------

using Result = std::pair<json, std::function<void(std::ostream&, const json&)>>;

Result cmd_hf(const Config& c, const std::string& arg) {
    DualForm f = read_form(c, arg, parse_field(c.field));
    return {hf_json(f, c.threads), text_hf};
}

Result cmd_ann(const Config& c, const std::string& arg, std::optional<int> degree) {
    DualForm f = read_form(c, arg, parse_field(c.field));
    json out;
    out["form"] = format_poly(f.form());
    out["h_vector"] = hilbert_function(f, c.threads).entries();
    json degs = json::array();
    int lo = degree.value_or(0), hi = degree.value_or(f.degree() + 1);
    if (lo < 0) throw InputError("--degree must be non-negative");
    for (int i = lo; i <= hi; ++i) {
        json gens = json::array();
        for (const auto& g : ann_degree(f, i)) gens.push_back(format_poly(g, 'x'));
        degs.push_back({{"degree", i}, {"dimension", gens.size()}, {"generators", gens}});
    }
    out["degrees"] = degs;
    return {out, [](std::ostream& os, const json& r) {
                os << "h-vector: " << seq(r["h_vector"]) << '\n';
                for (const auto& d : r["degrees"]) {
                    os << "[Ann F]_" << d["degree"] << ": dimension " << d["dimension"] << '\n';
                    text_list(os, d["generators"], "  ");
                }
            }};
}

Result cmd_lefschetz(const Config& c, const std::string& arg, bool strong) {
    const std::uint64_t seed = require_seed(c, strong ? "slp" : "wlp");
    DualForm f = read_form(c, arg, parse_field(c.field));
    LefschetzReport r = strong ? slp_check(f, c.trials, seed) : wlp_check(f, c.trials, seed);
    json out = lefschetz_json(r, strong);
    out["form"] = format_poly(f.form());
    return {out, text_lefschetz};
}

Result cmd_bounds_pair(const std::string& which, long n, int i) {
    json out;
    out["query"] = which;
    out["n"] = n;
    out["i"] = i;
    if (which == "expand") {
        BinomialExpansion e = binom_expansion(n, i);
        out["expansion"] = expansion_json(e);
        out["sum"] = big(e.sum());
    } else {
        out["expansion"] = n > 0 ? expansion_json(binom_expansion(n, i)) : json::array();
        out["bound"] = big(which == "macaulay" ? macaulay_bound(n, i) : green_bound(n, i));
    }
    return {out, [](std::ostream& os, const json& r) {
                std::string parts;
                for (const auto& p : r["expansion"]) {
                    if (!parts.empty()) parts += " + ";
                    parts += "C(" + p[0].dump() + "," + p[1].dump() + ")";
                }
                os << r["n"] << " = " << (parts.empty() ? "0" : parts) << '\n';
                if (r.contains("bound")) os << r["query"].get<std::string>() << " bound: " << r["bound"].dump() << '\n';
            }};
}

Result cmd_gotzmann(long n, int d, int s) {
    json out;
    out["query"] = "gotzmann";
    out["n"] = n;
    out["d"] = d;
    out["s"] = s;
    out["expansion"] = n > 0 ? expansion_json(binom_expansion(n, d)) : json::array();
    out["value"] = big(gotzmann_value(n, d, s));
    return {out, [](std::ostream& os, const json& r) {
                os << "h_" << r["d"] << " = " << r["n"] << " persists to h_(" << r["d"] << "+" << r["s"]
                   << ") = " << r["value"].dump() << '\n';
            }};
}

Result cmd_osequence(const std::string& text) {
    std::vector<long> h;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw InputError("empty entry in h-vector '" + text + "'");
        item = item.substr(a, b - a + 1);
        if (item.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("malformed h-vector entry '" + item + "'");
        try {
            h.push_back(std::stol(item));
        } catch (const std::out_of_range&) {
            throw InputError("h-vector entry '" + item + "' is out of range");
        }
    }
    if (h.empty()) throw InputError("empty h-vector");
    OSequenceCheck chk = is_o_sequence(h);
    json out;
    out["query"] = "osequence";
    out["h"] = h;
    out["valid"] = chk.valid;
    out["first_violation"] = chk.first_violation ? json(*chk.first_violation) : json(nullptr);
    json bounds = json::array();
    for (std::size_t i = 1; i + 1 < h.size(); ++i) bounds.push_back(big(macaulay_bound(h[i], static_cast<int>(i))));
    out["macaulay_bounds"] = bounds;
    return {out, [](std::ostream& os, const json& r) {
                os << seq(r["h"]) << ": " << (r["valid"].get<bool>() ? "valid" : "invalid");
                if (!r["first_violation"].is_null()) os << " (growth exceeds Macaulay's bound at i = " << r["first_violation"] << ')';
                os << '\n';
            }};
}

Result cmd_classify(const Config& c, const std::string& arg) {
    const std::uint64_t seed = require_seed(c, "classify");
    QuadricWeb web = parse_web(read_input(c, arg, "web"), parse_field(c.field));
    Classification cl = classify_web(web, seed);
    json out;
    out["web"] = format_web(web);
    out["label"] = to_string(cl.label);
    json inv;
    inv["hilbert_function"] = cl.invariants.hf;
    inv["essential_variables"] = cl.invariants.essential_variables;
    inv["generic_rank"] = cl.invariants.generic_rank;
    inv["web_discriminant"] = cl.invariants.web_discriminant.to_string();
    inv["dual_discriminant"] =
        cl.invariants.dual_discriminant ? json(cl.invariants.dual_discriminant->to_string()) : json(nullptr);
    out["invariants"] = inv;
    out["gin2"] = gin_json(cl.gin);
    return {out, [](std::ostream& os, const json& r) {
                const auto& i = r["invariants"];
                os << "label: " << r["label"].get<std::string>() << '\n'
                   << "Hilbert function: " << seq(i["hilbert_function"]) << '\n'
                   << "essential variables: " << i["essential_variables"] << ", generic rank " << i["generic_rank"] << '\n'
                   << "web discriminant: " << i["web_discriminant"].get<std::string>() << '\n';
                if (!i["dual_discriminant"].is_null())
                    os << "dual conic discriminant: " << i["dual_discriminant"].get<std::string>() << '\n';
            }};
}

Result cmd_catalog(const Config& c, const std::string& label) {
    const Field f = parse_field(c.field);
    json out;
    json entries = json::array();
    if (!label.empty()) {
        entries.push_back(catalog_entry(parse_orbit_label(label), f));
    } else {
        for (OrbitLabel l : all_orbit_labels()) entries.push_back(catalog_entry(l, f));
    }
    out["entries"] = entries;
    if (label.empty()) {
        json ex = json::array();
        for (const auto& e : exceptional_hvector_examples(f.is_prime() ? f : Field::prime()))
            ex.push_back({{"h_vector", e.h.entries()}, {"form", format_poly(e.form.form())}, {"origin", e.origin},
                          {"verified", true}});
        out["exceptional_hvectors"] = ex;
    }
    return {out, [](std::ostream& os, const json& r) {
                for (const auto& e : r["entries"])
                    os << std::left << std::setw(16) << e["label"].get<std::string>() << e["generators"].get<std::string>()
                       << "  HF " << seq(e["hilbert_function"]) << '\n';
                if (r.contains("exceptional_hvectors"))
                    for (const auto& e : r["exceptional_hvectors"])
                        os << "exceptional " << seq(e["h_vector"]) << ": " << e["form"].get<std::string>() << '\n';
            }};
}

Result cmd_family(const Config& c, const std::string& label, int degree) {
    const std::uint64_t seed = require_seed(c, "family");
    const Field f = parse_field(c.field);
    OrbitLabel l = parse_orbit_label(label);
    QuadricWeb web = orbit_representative(l, f);
    Rng rng(seed);
    DualForm form = inverse_system_sample(web, degree, rng);
    json out;
    out["label"] = to_string(l);
    out["web"] = format_web(web);
    out["degree"] = degree;
    out["form"] = format_poly(form.form());
    out["h_vector"] = hilbert_function(form, c.threads).entries();
    out["wlp"] = lefschetz_json(wlp_check(form, c.trials, splitmix64(seed)), false);
    return {out, [](std::ostream& os, const json& r) {
                const std::string form = r["form"].get<std::string>();
                os << "form: " << (form.size() <= 400 ? form : form.substr(0, 400) + " ... (use --json)") << '\n';
                os << "h-vector: " << seq(r["h_vector"]) << '\n';
                os << "WLP: " << r["wlp"]["verdict"].get<std::string>() << '\n';
            }};
}

Result cmd_gin2(const Config& c, const std::string& arg) {
    const std::uint64_t seed = require_seed(c, "gin2");
    QuadricWeb web = parse_web(read_input(c, arg, "web"), parse_field(c.field));
    json out = gin_json(gin2(web, c.trials, seed));
    out["web"] = format_web(web);
    return {out, [](std::ostream& os, const json& r) {
                os << "gin2: {";
                bool first = true;
                for (const auto& m : r["monomials"]) {
                    os << (first ? "" : ", ") << m.get<std::string>();
                    first = false;
                }
                os << "} (" << r["set"].get<std::string>() << " set, " << r["agreeing_trials"] << " of " << r["trials"]
                   << " trials agree)\n";
            }};
}

Result cmd_perazzo(const Config& c, int d) {
    const Field f = parse_field(c.field);
    DualForm form = perazzo_dual_form(d, f);
    json out = hf_json(form, c.threads);
    out["d"] = d;
    if (f.is_prime()) out["wlp"] = lefschetz_json(wlp_check(form, c.trials, c.seed.value_or(0)), false);
    return {out, [](std::ostream& os, const json& r) {
                os << "form: " << r["form"].get<std::string>() << '\n';
                text_hf(os, r);
                if (r.contains("wlp")) {
                    os << "WLP: " << r["wlp"]["verdict"].get<std::string>();
                    if (!r["wlp"]["failing_degrees"].empty()) os << ' ' << r["wlp"]["failing_degrees"].dump();
                    os << '\n';
                }
            }};
}

Result cmd_snake(const Config& c, const std::string& arg, const std::string& g_text, const std::string& l_text) {
    const Field f = parse_field(c.field);
    std::string text = read_input(c, arg, "form");
    std::size_t n = c.n ? resolve_nvars(c, text)
                        : std::max({max_variable_index(text), max_variable_index(g_text), max_variable_index(l_text),
                                    std::size_t{1}});
    DualForm form(parse_poly(text, n, f));
    Poly g = parse_poly(g_text, n, f);
    Poly l(f, n);
    if (!l_text.empty()) {
        l = parse_poly(l_text, n, f);
    } else {
        Rng rng(require_seed(c, "snake without --l"));
        l = random_linear_form(n, f, rng);
    }
    SnakeLedger led = snake_consistency(form, g, l);
    json out;
    out["form"] = format_poly(form.form());
    out["g"] = format_poly(g, 'x');
    out["l"] = format_poly(l, 'x');
    out["shift"] = led.shift;
    out["hf_a"] = led.hf_a;
    out["hf_b"] = led.hf_b;
    out["hf_c"] = led.hf_c;
    json rows = json::array();
    auto map_json = [](const SnakeRow::Map& m) {
        return json{{"source", m.source}, {"target", m.target}, {"rank", m.rank}};
    };
    for (const auto& r : led.rows)
        rows.push_back({{"degree", r.degree}, {"left", map_json(r.left)}, {"middle", map_json(r.middle)},
                        {"right", map_json(r.right)}, {"consistent", r.consistent}});
    out["rows"] = rows;
    out["consistent"] = led.consistent();
    return {out, [](std::ostream& os, const json& r) {
                os << "HF A: " << seq(r["hf_a"]) << "  HF B: " << seq(r["hf_b"]) << "  HF C: " << seq(r["hf_c"]) << '\n';
                os << "  degree  rank B  rank A  rank C  ok\n";
                for (const auto& row : r["rows"])
                    os << "  " << std::setw(6) << row["degree"].get<int>() << "  " << std::setw(6)
                       << row["left"]["rank"].get<long>() << "  " << std::setw(6) << row["middle"]["rank"].get<long>()
                       << "  " << std::setw(6) << row["right"]["rank"].get<long>() << "  "
                       << (row["consistent"].get<bool>() ? "yes" : "NO") << '\n';
                os << "ledger consistent: " << (r["consistent"].get<bool>() ? "yes" : "no") << '\n';
            }};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"Exact toolkit for artinian Gorenstein algebras given by Macaulay dual generators", "gorenstein-cli"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    Config cfg;
    std::uint64_t seed_value = 0;
    std::size_t n_value = 0;
    app.add_option("--field", cfg.field, "q, fp or fp:PRIME (default fp = 2^61-1)");
    auto* seed_opt = app.add_option("--seed", seed_value, "seed for randomized commands");
    app.add_option("--trials", cfg.trials, "random trials for Lefschetz and gin tests")->check(CLI::PositiveNumber);
    auto* n_opt = app.add_option("--n", n_value, "number of variables (default: largest index used)");
    app.add_flag("--json", cfg.json, "emit a JSON report");
    app.add_option("--threads", cfg.threads, "worker threads for rank computations")->check(CLI::PositiveNumber);
    app.add_option("--input", cfg.input_path, "read the form or web from a file");

    std::string arg, arg2, g_text, l_text;
    std::optional<int> degree;
    long bn = 0;
    int bi = 0, bs = 0;

    auto* hf = app.add_subcommand("hf", "Hilbert function of A_F");
    hf->add_option("form", arg, "dual generator F");
    auto* ann = app.add_subcommand("ann", "graded pieces of Ann(F)");
    ann->add_option("form", arg, "dual generator F");
    ann->add_option("--degree", degree, "single degree to report");
    auto* wlp = app.add_subcommand("wlp", "weak Lefschetz test");
    wlp->add_option("form", arg, "dual generator F");
    auto* slp = app.add_subcommand("slp", "strong Lefschetz test");
    slp->add_option("form", arg, "dual generator F");

    auto* bounds = app.add_subcommand("bounds", "Macaulay, Green and Gotzmann bounds");
    bounds->require_subcommand(1);
    std::map<std::string, CLI::App*> pair_queries;
    for (const char* q : {"macaulay", "green", "expand"}) {
        auto* s = bounds->add_subcommand(q);
        s->add_option("n", bn)->required();
        s->add_option("i", bi)->required();
        pair_queries[q] = s;
    }
    auto* gotz = bounds->add_subcommand("gotzmann", "persistence value from h_d = n");
    gotz->add_option("n", bn)->required();
    gotz->add_option("d", bi)->required();
    gotz->add_option("s", bs)->required();
    auto* oseq = bounds->add_subcommand("osequence", "check Macaulay growth of an h-vector");
    oseq->add_option("hvector", arg, "comma-separated entries")->required();

    auto* classify = app.add_subcommand("classify", "orbit label of a quadric web");
    classify->add_option("web", arg, "four comma-separated quadrics");
    auto* catalog = app.add_subcommand("catalog", "orbit representatives and exceptional h-vectors");
    catalog->add_option("label", arg, "orbit label (default: all)");
    auto* family = app.add_subcommand("family", "sample the inverse system of a catalog web");
    family->add_option("label", arg)->required();
    family->add_option("degree", bi)->required();
    auto* gin = app.add_subcommand("gin2", "degree-2 lex generic initial ideal of a web");
    gin->add_option("web", arg, "four comma-separated quadrics");
    auto* perazzo = app.add_subcommand("perazzo", "Perazzo form of socle degree d");
    perazzo->add_option("d", bi)->required();
    auto* snake = app.add_subcommand("snake", "snake-lemma ledger for A, A/(0:g), A/(g)");
    snake->add_option("form", arg, "dual generator F");
    snake->add_option("--g", g_text, "homogeneous form g")->required();
    snake->add_option("--l", l_text, "linear form l (default: random from --seed)");

    std::vector<const char*> argv{"gorenstein-cli"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (*seed_opt) cfg.seed = seed_value;
    if (*n_opt) cfg.n = n_value;

    std::string command;
    try {
        Result res;
        if (*hf) {
            command = "hf";
            res = cmd_hf(cfg, arg);
        } else if (*ann) {
            command = "ann";
            res = cmd_ann(cfg, arg, degree);
        } else if (*wlp) {
            command = "wlp";
            res = cmd_lefschetz(cfg, arg, false);
        } else if (*slp) {
            command = "slp";
            res = cmd_lefschetz(cfg, arg, true);
        } else if (*bounds) {
            command = "bounds";
            if (*gotz) {
                res = cmd_gotzmann(bn, bi, bs);
            } else if (*oseq) {
                res = cmd_osequence(arg);
            } else {
                for (const auto& [q, s] : pair_queries)
                    if (*s) res = cmd_bounds_pair(q, bn, bi);
            }
        } else if (*classify) {
            command = "classify";
            res = cmd_classify(cfg, arg);
        } else if (*catalog) {
            command = "catalog";
            res = cmd_catalog(cfg, arg);
        } else if (*family) {
            command = "family";
            res = cmd_family(cfg, arg, bi);
        } else if (*gin) {
            command = "gin2";
            res = cmd_gin2(cfg, arg);
        } else if (*perazzo) {
            command = "perazzo";
            res = cmd_perazzo(cfg, bi);
        } else if (*snake) {
            command = "snake";
            res = cmd_snake(cfg, arg, g_text, l_text);
        }

        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (cfg.json) {
            json rep;
            rep["schema_version"] = kSchemaVersion;
            rep["tool_version"] = kToolVersion;
            rep["command"] = command;
            rep["argv"] = args;
            json conf;
            conf["field"] = parse_field(cfg.field).describe();
            conf["seed"] = cfg.seed ? json(*cfg.seed) : json(nullptr);
            conf["trials"] = cfg.trials;
            conf["n"] = cfg.n ? json(*cfg.n) : json(nullptr);
            conf["threads"] = cfg.threads;
            rep["config"] = conf;
            rep["result"] = res.first;
            rep["wall_time_ms"] = ms;
            out << rep.dump(2) << '\n';
        } else {
            res.second(out, res.first);
        }
        return 0;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const HypothesisError& e) {
        err << "hypothesis violated: " << e.what() << '\n';
        return 3;
    } catch (const InvariantError& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return 4;
    }
}

}  // namespace gorenstein
