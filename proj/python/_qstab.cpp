#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "qstab/alg.hpp"
#include "qstab/collections.hpp"
#include "qstab/suites.hpp"
#include "qstab/triples.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace qstab;

namespace {

StabilityCondition condition(const std::string& quiver, const std::string& charge, const std::string& heart) {
    Quiver q = quiver_by_name(quiver);
    return StabilityCondition(q, parse_heart(q, heart), parse_charge(charge));
}

std::vector<std::string> labels(const FormalObject& x) {
    std::vector<std::string> out;
    for (const auto& s : x.summands) out.push_back(summand_key(s));
    return out;
}

std::string hn_json(const std::string& quiver, const std::string& object, const std::string& charge,
                    const std::string& heart) {
    StabilityCondition sc = condition(quiver, charge, heart);
    ExcObject e = parse_object(quiver, object);
    HNResult h = hn_filtration(sc, e);
    if (h.status != Status::Yes) throw CapacityError("HN filtration undetermined");
    json f = json::array();
    for (const auto& x : h.factors)
        f.push_back({{"object", labels(x.object)}, {"phase", x.phase.value()}, {"exact", x.phase.exact()}});
    return json{{"schema", "qstab.hn/1"}, {"object", e.label()}, {"sigma", sc.describe()},
                {"semistable", h.factors.size() == 1}, {"factors", f}, {"theta", theta(sc, e)}}
        .dump();
}

std::string triples_json(const std::string& charge, int window, int range, bool all) {
    StabilityCondition sc = StabilityCondition::standard(q1(), parse_charge(charge));
    json list = json::array();
    for (const auto& r : enumerate_sigma_triples(sc, window, range, !all)) list.push_back(json::parse(sigma_report_to_json(r)));
    return list.dump();
}

std::string suite_json(const std::string& name, const std::string& quiver, int max_m, int count, uint64_t seed) {
    SuiteOptions o;
    o.quiver = quiver;
    o.max_m = max_m;
    o.count = count;
    o.seed = seed;
    SuiteResult r = run_suite(name, o);
    json j = r.report;
    j["undetermined"] = r.undetermined;
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_qstab, m) {
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

    m.def("hom_ext", [](const std::string& quiver, const std::string& x, const std::string& y) {
        HomExt h = catalog_hom_ext(parse_object(quiver, x), parse_object(quiver, y));
        return std::make_pair(h.hom, h.ext);
    });
    m.def("hom_degree", [](const std::string& quiver, const std::string& x, const std::string& y, int p) {
        return hom_degree(parse_object(quiver, x), parse_object(quiver, y), p);
    });
    m.def("roots", [](const std::string& quiver, long long bound) {
        std::vector<std::pair<std::vector<long long>, std::string>> out;
        for (const auto& [d, t] : enumerate_roots(quiver_by_name(quiver), bound))
            out.push_back({std::vector<long long>(d.begin(), d.end()), root_type_name(t)});
        return out;
    });
    m.def("catalog", [](const std::string& quiver, int window) {
        std::vector<std::string> out;
        for (const auto& x : catalog_objects(quiver, window)) out.push_back(x.label());
        return out;
    });
    m.def("is_semistable", [](const std::string& quiver, const std::string& object, const std::string& charge,
                              const std::string& heart) {
        return std::string(status_name(is_semistable(condition(quiver, charge, heart), parse_object(quiver, object))));
    }, py::arg("quiver"), py::arg("object"), py::arg("charge"), py::arg("heart") = "standard");
    m.def("hn_json", &hn_json, py::arg("quiver"), py::arg("object"), py::arg("charge"), py::arg("heart") = "standard");
    m.def("classify_json", [](const std::string& quiver, const std::string& object, const std::string& charge,
                              const std::string& heart) {
        return report_to_json(alg_classify(condition(quiver, charge, heart), parse_object(quiver, object)));
    }, py::arg("quiver"), py::arg("object"), py::arg("charge"), py::arg("heart") = "standard");
    m.def("fixture_json", [](const std::string& name) { return report_to_json(fixture_report(name)); });
    m.def("rsequence_json", [](const std::string& quiver, const std::string& object, const std::string& charge,
                               const std::string& heart) {
        return rsequence_to_json(r_sequence(condition(quiver, charge, heart), parse_object(quiver, object)));
    }, py::arg("quiver"), py::arg("object"), py::arg("charge"), py::arg("heart") = "standard");
    m.def("sigma_triples_json", &triples_json, py::arg("charge"), py::arg("window") = 3, py::arg("range") = 2,
          py::arg("all") = false);
    m.def("validate_json", [](const std::string& quiver, const std::string& collection, const std::string& charge) {
        StabilityCondition sc = condition(quiver, charge, "standard");
        return sigma_report_to_json(validate_sigma_collection(sc, parse_collection(quiver, collection)));
    });
    m.def("kronecker_pair_json", [](int l, const std::string& charge, int window) {
        StabilityCondition sc = StabilityCondition::standard(kronecker(l), parse_charge(charge));
        return sigma_report_to_json(kronecker_sigma_pair(l, sc, window));
    }, py::arg("l"), py::arg("charge"), py::arg("window") = 6);
    m.def("mutate", [](const std::string& quiver, const std::string& a, const std::string& b, const std::string& side) {
        if (side != "left" && side != "right") throw DomainError("side is left or right");
        Normalized n = mutate(parse_object(quiver, a), parse_object(quiver, b), side == "left" ? Side::Left : Side::Right);
        return std::make_pair(n.object.label(), n.parity);
    });
    m.def("braid", [](const std::string& quiver, const std::string& word, const std::string& collection) {
        std::vector<std::string> out;
        for (const auto& x : braid_act(word, parse_collection(quiver, collection))) out.push_back(x.label());
        return out;
    });
    m.def("suite_names", &suite_names);
    m.def("run_suite_json", &suite_json, py::arg("name"), py::arg("quiver") = "", py::arg("max_m") = -1,
          py::arg("count") = -1, py::arg("seed") = 20240601);
}
