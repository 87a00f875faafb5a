#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qstab/alg.hpp"
#include "qstab/collections.hpp"
#include "qstab/subrep.hpp"
#include "qstab/suites.hpp"
#include "qstab/triples.hpp"

using namespace qstab;
using nlohmann::json;

namespace {

struct Config {
    std::string quiver = "q1";
    int window = 3;
    int budget = kDefaultOracleBudget;
    std::vector<int> primes{2, 3};
    std::string format = "json";
    uint64_t seed = 20240601;
};

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kUndetermined = 3 };

json phase_json(const PhaseKey& k) { return {{"exact", k.exact()}, {"value", k.value()}}; }

json formal_json(const FormalObject& x) {
    json j = json::array();
    for (const auto& s : x.summands) j.push_back(summand_key(s));
    return j;
}

StabilityCondition condition(const Config& c, const std::string& heart, const std::string& charge) {
    Quiver q = quiver_by_name(c.quiver);
    return StabilityCondition(q, parse_heart(q, heart), parse_charge(charge));
}

void emit(const Config& c, const json& j, const std::string& pretty) {
    if (c.format == "pretty")
        std::cout << pretty;
    else
        std::cout << j.dump(2) << "\n";
}

int cmd_tables(const Config& c) {
    auto objs = catalog_objects(c.quiver, c.window);
    json rows = json::array();
    std::ostringstream csv;
    csv << "x,y,hom,ext\n";
    for (const auto& x : objs)
        for (const auto& y : objs) {
            HomExt h = catalog_hom_ext(x, y);
            rows.push_back({{"x", x.label()}, {"y", y.label()}, {"hom", h.hom}, {"ext", h.ext}});
            csv << x.label() << "," << y.label() << "," << h.hom << "," << h.ext << "\n";
        }
    json j{{"schema", "qstab.tables/1"}, {"quiver", c.quiver}, {"window", c.window}, {"pairs", rows}};
    if (c.format == "csv")
        std::cout << csv.str();
    else
        emit(c, j, csv.str());
    return kPass;
}

int cmd_roots(const Config& c, int bound) {
    auto list = enumerate_roots(quiver_by_name(c.quiver), bound);
    json rows = json::array();
    std::ostringstream txt;
    for (const auto& [d, t] : list) {
        rows.push_back({{"dims", dims_to_string(d)}, {"type", root_type_name(t)}});
        txt << dims_to_string(d) << " " << root_type_name(t) << "\n";
    }
    emit(c, {{"schema", "qstab.roots/1"}, {"quiver", c.quiver}, {"bound", bound}, {"roots", rows}}, txt.str());
    return kPass;
}

int cmd_hn(const Config& c, const std::string& obj, const std::string& charge, const std::string& heart) {
    StabilityCondition sc = condition(c, heart, charge);
    ExcObject e = parse_object(c.quiver, obj);
    HNResult h = hn_filtration(sc, e);
    if (h.status != Status::Yes) {
        std::cerr << "HN filtration of " << e.label() << " undetermined\n";
        return kUndetermined;
    }
    json f = json::array();
    std::ostringstream txt;
    txt << e.label() << " under " << sc.describe() << "\n";
    for (const auto& x : h.factors) {
        f.push_back({{"object", formal_json(x.object)}, {"phase", phase_json(x.phase)}});
        txt << "  " << formal_json(x.object).dump() << " phase " << x.phase.value() << "\n";
    }
    json j{{"schema", "qstab.hn/1"}, {"object", e.label()}, {"sigma", sc.describe()},
           {"semistable", h.factors.size() == 1}, {"factors", f}, {"theta", theta(sc, e)}};
    emit(c, j, txt.str());
    return kPass;
}

int report_exit(const std::vector<CheckItem>& items) {
    bool fail = false, unknown = false;
    for (const auto& i : items) {
        fail = fail || i.status == CheckStatus::Fail;
        unknown = unknown || i.status == CheckStatus::NotCheckable;
    }
    return fail ? kFail : (unknown ? kUndetermined : kPass);
}

std::string report_pretty(const CaseReport& r) {
    std::ostringstream s;
    s << r.e.label() << ": " << case_name(r.tag) << (r.computed ? "" : " (fixture " + r.fixture + ")") << "\n";
    s << "  U = " << formal_json(r.u).dump() << "  V = " << formal_json(r.v).dump() << "\n";
    for (const auto& c : r.checklist) s << "  " << check_status_name(c.status) << " " << c.id << ": " << c.detail << "\n";
    return s.str();
}

int cmd_classify(const Config& c, const std::string& obj, const std::string& charge, const std::string& heart,
                 const std::string& fixture, const std::string& search, int tries) {
    CaseReport r;
    if (!fixture.empty()) {
        r = fixture_report(fixture);
    } else if (!search.empty()) {
        std::map<std::string, CaseTag> tags{{"C1", CaseTag::C1}, {"C2", CaseTag::C2}, {"C3", CaseTag::C3}};
        if (!tags.count(search)) throw DomainError("search tag must be C1, C2 or C3");
        auto found = find_computed_case(c.quiver, tags[search], c.seed, tries, c.window);
        if (!found) {
            std::cerr << "no computed " << search << " instance in " << tries << " charges\n";
            return kFail;
        }
        r = *found;
    } else {
        if (obj.empty() || charge.empty()) throw DomainError("classify needs --object and --charge");
        r = alg_classify(condition(c, heart, charge), parse_object(c.quiver, obj));
    }
    if (c.format == "pretty")
        std::cout << report_pretty(r);
    else
        std::cout << report_to_json(r) << "\n";
    return report_exit(r.checklist);
}

int cmd_rseq(const Config& c, const std::string& obj, const std::string& charge, const std::string& heart) {
    StabilityCondition sc = condition(c, heart, charge);
    RSequence s = r_sequence(sc, parse_object(c.quiver, obj));
    if (c.format == "pretty") {
        std::cout << s.origin.label() << " -> " << s.end << "\n";
        for (const auto& st : s.steps)
            std::cout << "  " << st.tag << " S=" << summand_key(st.s) << " E=" << summand_key(st.e) << "\n";
    } else {
        std::cout << rsequence_to_json(s) << "\n";
    }
    return report_exit(s.invariants);
}

int cmd_find_triple(const Config& c, const std::string& charge, bool all, int range) {
    StabilityCondition sc = condition(c, "standard", charge);
    auto found = enumerate_sigma_triples(sc, c.window, range, !all);
    json list = json::array();
    std::ostringstream txt;
    for (const auto& r : found) {
        list.push_back(json::parse(sigma_report_to_json(r)));
        txt << collection_to_string(r.collection) << "  (t, t+1] with t = " << r.t_witness << "\n";
    }
    json j{{"schema", "qstab.find-triple/1"}, {"sigma", sc.describe()}, {"count", found.size()}, {"triples", list}};
    if (!found.empty()) {
        j["triple"] = json::array();
        for (const auto& x : found.front().collection) j["triple"].push_back(x.label());
    }
    emit(c, j, txt.str());
    return found.empty() ? kFail : kPass;
}

int cmd_kpair(Config c, int l, const std::string& charge, int window) {
    c.quiver = "k" + std::to_string(l);
    StabilityCondition sc = condition(c, "standard", charge);
    SigmaReport r = kronecker_sigma_pair(l, sc, window);
    std::ostringstream txt;
    txt << collection_to_string(r.collection);
    for (const auto& m : r.members) txt << "  " << m.object.label() << " phase " << m.phase->value();
    txt << "\n";
    emit(c, json::parse(sigma_report_to_json(r)), txt.str());
    return r.verdict == Status::Yes ? kPass : kFail;
}

int cmd_limits(const Config& c, const std::string& charge, int max_m) {
    StabilityCondition sc = condition(c, "standard", charge);
    PhaseStats ps = phase_stats(sc, max_m);
    json entries = json::array();
    std::ostringstream csv;
    csv << "object,semistable,phase\n";
    for (const auto& e : ps.entries) {
        json x{{"object", e.object.label()}, {"semistable", status_name(e.semistable)}};
        if (e.semistable == Status::Yes) x["phase"] = phase_json(e.phase);
        entries.push_back(x);
        csv << e.object.label() << "," << status_name(e.semistable) << ","
            << (e.semistable == Status::Yes ? std::to_string(e.phase.value()) : "") << "\n";
    }
    json j{{"schema", "qstab.limits/1"}, {"sigma", sc.describe()}, {"max_m", max_m}, {"entries", entries}};
    if (ps.have_range)
        j["range"] = {{"phi_min", phase_json(ps.phi_min)}, {"min_object", ps.min_label},
                      {"phi_max", phase_json(ps.phi_max)}, {"max_object", ps.max_label}};
    if (ps.delta_phase != 0 || ps.minus_delta_phase != 0) {
        double n = std::hypot(ps.delta.re.get_d(), ps.delta.im.get_d());
        j["delta"] = {{"charge", to_string(ps.delta)},
                      {"phase", ps.delta_phase},
                      {"minus_phase", ps.minus_delta_phase},
                      {"directions", {{ps.delta.re.get_d() / n, ps.delta.im.get_d() / n},
                                      {-ps.delta.re.get_d() / n, -ps.delta.im.get_d() / n}}}};
    }
    j["limit_families"] = ps.limit_families;
    if (c.format == "csv")
        std::cout << csv.str();
    else
        emit(c, j, csv.str());
    return kPass;
}

int cmd_mutate(const Config& c, const std::string& pair, const std::string& side) {
    Collection p = parse_collection(c.quiver, pair);
    if (p.size() != 2) throw DomainError("mutate needs a pair");
    if (side != "left" && side != "right") throw DomainError("side must be left or right");
    Normalized n = mutate(p[0], p[1], side == "left" ? Side::Left : Side::Right);
    json j{{"schema", "qstab.mutate/1"}, {"pair", {p[0].label(), p[1].label()}}, {"side", side},
           {"object", n.object.label()}, {"parity", n.parity}, {"class", dims_to_string(object_class(n.object))}};
    emit(c, j, n.object.label() + " parity " + std::to_string(n.parity) + "\n");
    return kPass;
}

int cmd_braid(const Config& c, const std::string& word, const std::string& coll) {
    Collection t = parse_collection(c.quiver, coll);
    Collection r = braid_act(word, t);
    json out = json::array();
    for (const auto& x : r) out.push_back(x.label());
    json j{{"schema", "qstab.braid/1"}, {"word", word}, {"input", collection_to_string(t)}, {"output", out},
           {"exceptional", is_exceptional_collection(r)}};
    emit(c, j, collection_to_string(r) + "\n");
    return kPass;
}

int cmd_subreps(const Config& c, const std::string& obj) {
    Realized x = realize(parse_object(c.quiver, obj));
    json per = json::object();
    std::set<DimVec> first;
    bool agree = true;
    for (size_t i = 0; i < c.primes.size(); ++i) {
        auto dims = subrep_dims_fp(x.rep, c.primes[i], c.budget);
        json l = json::array();
        for (const auto& d : dims) l.push_back(dims_to_string(d));
        per[std::to_string(c.primes[i])] = l;
        if (i == 0) first = dims;
        agree = agree && dims == first;
    }
    json j{{"schema", "qstab.subreps/1"}, {"object", obj}, {"by_prime", per}, {"agree", agree}};
    emit(c, j, per.dump() + "\n");
    return agree ? kPass : kUndetermined;
}

int cmd_verify(const Config& c, bool quiver_given, const std::string& suite, int max_m, int count) {
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    SuiteOptions o;
    o.quiver = quiver_given && suite != "all" ? c.quiver : "";
    o.max_m = max_m;
    o.count = count;
    o.seed = c.seed;
    json out = json::array();
    bool pass = true, unknown = false;
    std::ostringstream txt;
    for (const auto& n : names) {
        SuiteResult r = run_suite(n, o);
        pass = pass && r.pass;
        unknown = unknown || r.undetermined;
        out.push_back(r.report);
        txt << "[" << (r.pass ? "pass" : "FAIL") << "] " << n << "\n";
        for (const auto& l : r.lines) txt << "  " << l << "\n";
    }
    emit(c, {{"schema", "qstab.verify/1"}, {"suites", out}, {"pass", pass}}, txt.str());
    return pass ? kPass : (unknown ? kUndetermined : kFail);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qstab: exceptional objects, stability conditions and sigma-exceptional collections"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--quiver", cfg.quiver, "q1, q2 or k<l>")->capture_default_str();
    app.add_option("--window,-W", cfg.window, "catalog parameter window W")->capture_default_str()->check(CLI::NonNegativeNumber);
    app.add_option("--budget", cfg.budget, "subrepresentation oracle budget (total dimension)")->capture_default_str();
    app.add_option("--primes", cfg.primes, "prime fields for the subrepresentation oracle");
    app.add_option("--format", cfg.format, "json, pretty or csv")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "pretty", "csv"}));
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();

    std::string object, charge, heart = "standard", fixture, search, suite, word, coll, pair, side = "left";
    int bound = 10, max_m = -1, count = -1, l = 2, kwindow = 6, range = 2, tries = 200;
    bool all = false;
    const std::string charge_help =
        "values on the heart simples in the heart quiver's vertex order, e.g. \"-1+1i,0+1i,1/2+1i\"";
    const std::string heart_help = "standard, source:V or sink:V (reflected heart at vertex V)";

    auto* tables = app.add_subcommand("tables", "hom/ext table over the catalog window");
    auto* roots = app.add_subcommand("roots", "real and imaginary roots up to a bound");
    roots->add_option("--bound", bound)->capture_default_str();
    auto* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration of a catalog object");
    auto* classify = app.add_subcommand("classify", "case of the output triangle with its checklist");
    auto* rseq = app.add_subcommand("rseq", "iterated output triangles from a regular object");
    for (auto* s : {hn, classify, rseq}) {
        s->add_option("--object", object, "catalog label such as E1:2, M', s-1, with optional [shift]");
        s->add_option("--charge", charge, charge_help);
        s->add_option("--heart", heart, heart_help)->capture_default_str();
    }
    hn->get_option("--object")->required();
    hn->get_option("--charge")->required();
    rseq->get_option("--object")->required();
    rseq->get_option("--charge")->required();
    classify->add_option("--fixture", fixture, "symbolic fixture: C3, B1 or B2");
    classify->add_option("--search", search, "random charge search for a computed C1, C2 or C3");
    classify->add_option("--tries", tries)->capture_default_str();
    auto* find = app.add_subcommand("find-triple", "sigma-exceptional triples for a standard-heart charge");
    find->add_option("--charge", charge, charge_help)->required();
    find->add_flag("--all", all, "all triples instead of the first");
    find->add_option("--range", range, "member shift range")->capture_default_str();
    auto* kpair = app.add_subcommand("kpair", "sigma-exceptional pair on the Kronecker quiver K(l)");
    kpair->add_option("-l", l)->capture_default_str()->check(CLI::PositiveNumber);
    kpair->add_option("--charge", charge, "values on (s0[1], s1), the source and sink simples")->required();
    kpair->add_option("--window", kwindow)->capture_default_str();
    auto* limits = app.add_subcommand("limits", "phases of semistable catalog objects and their limits");
    limits->add_option("--charge", charge, charge_help)->required();
    limits->add_option("--max-m", max_m)->required();
    auto* mut = app.add_subcommand("mutate", "left or right mutation of an exceptional pair");
    mut->add_option("--pair", pair, "two objects, e.g. \"E1:0,E2:0\"")->required();
    mut->add_option("--side", side)->capture_default_str();
    auto* braid = app.add_subcommand("braid", "braid group action on an exceptional collection");
    braid->add_option("--word", word, "generators such as \"L1 L1 R0\"")->required();
    braid->add_option("--collection", coll, "e.g. \"E1:1,M,E4:0\"")->required();
    auto* subreps = app.add_subcommand("subreps", "subrepresentation dimension vectors over the oracle primes");
    subreps->add_option("--object", object)->required();
    auto* verify = app.add_subcommand("verify", "regression suites");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
    verify->add_option("--max-m", max_m, "suite window override");
    verify->add_option("--count", count, "number of random samples override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }
    try {
        if (*tables) return cmd_tables(cfg);
        if (*roots) return cmd_roots(cfg, bound);
        if (*hn) return cmd_hn(cfg, object, charge, heart);
        if (*classify) return cmd_classify(cfg, object, charge, heart, fixture, search, tries);
        if (*rseq) return cmd_rseq(cfg, object, charge, heart);
        if (*find) return cmd_find_triple(cfg, charge, all, range);
        if (*kpair) return cmd_kpair(cfg, l, charge, kwindow);
        if (*limits) return cmd_limits(cfg, charge, max_m);
        if (*mut) return cmd_mutate(cfg, pair, side);
        if (*braid) return cmd_braid(cfg, word, coll);
        if (*subreps) return cmd_subreps(cfg, object);
        if (*verify) return cmd_verify(cfg, app.get_option("--quiver")->count() > 0, suite, max_m, count);
    } catch (const CapacityError& e) {
        std::cerr << "undetermined: " << e.what() << "\n";
        return kUndetermined;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
