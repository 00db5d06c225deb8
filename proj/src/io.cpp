#include "cdim/io.hpp"

namespace cdim {

Json to_json(const ExponentSet& set) {
    Json arr = Json::array();
    for (const auto& e : set.members) arr.push_back(e.entries());
    return Json{{"arity", set.arity}, {"members", arr}};
}

ExponentSet exponent_set_from_json(const Json& j) {
    ExponentSet set;
    set.arity = j.at("arity").get<int>();
    for (const auto& row : j.at("members"))
        set.members.emplace_back(row.get<std::vector<int>>());
    return set;
}

Json to_json(const DmParameters& p) {
    return Json{{"n", p.n}, {"m", p.m}, {"d", p.d}, {"mu", p.mu}, {"r", p.r}, {"V", p.V}, {"e", p.e}};
}

Json to_json(const DetReport& r) {
    Json j;
    j["det"] = r.det.str();
    if (r.det.is_zero()) {
        j["ord"] = "inf";
        j["deg"] = "-inf";
    } else {
        j["ord"] = r.ord;
        j["deg"] = r.deg;
    }
    j["lower_bound_ok"] = r.lower_bound_ok;
    j["upper_bound"] = r.upper_bound;
    return j;
}

Json to_json(const Hypersurface& h) {
    Json coeffs = Json::array();
    for (const auto& c : h.coeffs) coeffs.push_back(c.str());
    return Json{{"arity", h.arity},
                {"degree", h.degree()},
                {"exponents", to_json(h.exponents)},
                {"coeffs", coeffs}};
}

namespace {

Json margin_to_json(const TrMargin& m) {
    Json j;
    if (m.infinite)
        j["margin"] = "inf";
    else
        j["margin"] = m.value;
    j["lower_bound_only"] = m.lower_bound_only;
    return j;
}

} // namespace

Json to_json(const TrCheckReport& r) {
    Json samples = Json::array();
    for (const auto& [x, y] : r.samples) samples.push_back(Json{x.str(), y.str()});
    Json margins = Json::array();
    for (const auto& m : r.margins) margins.push_back(margin_to_json(m));
    return Json{{"r", r.r},
                {"pass", r.pass},
                {"worst", margin_to_json(r.worst)},
                {"samples", samples},
                {"margins", margins}};
}

namespace {

Json class_to_json(const FiberClass& cls) {
    Json arr = Json::array();
    for (const auto& rc : cls) arr.push_back(rc.rep().str());
    return arr;
}

} // namespace

Json to_json(const CDimWitnessReport& r) {
    Json fibers = Json::array();
    for (const auto& f : r.fibers) {
        Json jf{{"class", class_to_json(f.cls)}, {"dimension", f.dimension}};
        if (f.dimension < 1) jf["size_bound"] = f.size_bound;
        fibers.push_back(jf);
    }
    Json j{{"s", r.s},
           {"e", r.e},
           {"d", r.d},
           {"map", r.map_desc},
           {"infinite_fiber", r.infinite_fiber},
           {"max_finite_fiber", r.max_finite_fiber},
           {"fibers", fibers}};
    if (r.infinite_fiber_class) j["infinite_fiber_class"] = class_to_json(*r.infinite_fiber_class);
    return j;
}

Json to_json(const CollapseReport& r) {
    Json j{{"n", r.n},
           {"N_n", r.N_n},
           {"s", r.s},
           {"e", r.e},
           {"e_within_range", r.e_within_range},
           {"fiber_size", r.fiber_size},
           {"max_value_degree", r.max_value_degree},
           {"collapsed", r.collapsed},
           {"chain_ok", r.chain_ok}};
    if (r.chain_bound) j["chain_bound"] = *r.chain_bound;
    return j;
}

Json to_json(const ExpGraphReport& r) {
    Json certs = Json::array();
    for (const auto& c : r.certificates) {
        Json jc{{"x", c.x.str()}};
        if (c.constant_point) {
            jc["constant_point"] = true;
        } else {
            jc["witness_degree"] = c.witness_degree;
            jc["witness_coeff"] = scalar_str(c.witness_coeff);
        }
        certs.push_back(jc);
    }
    return Json{{"s", r.s}, {"prec", r.prec}, {"certificates", certs}};
}

Json to_json(const ReductionStep& r) {
    return Json{{"g", r.g.str({"x", "y"})},
                {"ydeg_f", r.ydeg_f},
                {"xdeg_f", r.xdeg_f},
                {"ydeg_g", r.ydeg_g},
                {"xdeg_g", r.xdeg_g},
                {"terminal", r.terminal}};
}

Json to_json(const CdimTriple& t) {
    return Json{{"N", t.N}, {"d", t.d}, {"e", t.e}};
}

Json curve_to_json(const CurveSpec& curve) {
    if (const auto* alg = std::get_if<AlgebraicPlane>(&curve))
        return Json{{"kind", "algebraic_plane"}, {"poly", alg->f.str({"x", "y"})}};
    if (const auto* ser = std::get_if<SeriesGraph>(&curve))
        return Json{{"kind", "series_graph"}, {"generator", ser->generator}, {"min_ord", ser->min_ord}};
    const auto& adv = std::get<AdversarialCurve>(curve);
    return Json{{"kind", "adversarial"},
                {"N_seq", adv.params.N_seq},
                {"F_vals", adv.params.F_vals},
                {"truncation", adv.params.truncation}};
}

CurveSpec curve_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "algebraic_plane") {
        MultiPoly f = MultiPoly::parse(j.at("poly").get<std::string>(), 2, {"x", "y"});
        return AlgebraicPlane(std::move(f));
    }
    if (kind == "series_graph") {
        SeriesGraph sg;
        sg.generator = j.at("generator").get<std::string>();
        if (sg.generator != "exp")
            raise(errc::unsupported_map, "unknown series generator: " + sg.generator);
        if (j.contains("min_ord")) sg.min_ord = j.at("min_ord").get<long>();
        return sg;
    }
    if (kind == "adversarial") {
        AdversarialCurve adv;
        adv.params.N_seq = j.at("N_seq").get<std::vector<long>>();
        adv.params.F_vals = j.at("F_vals").get<std::vector<long>>();
        adv.params.truncation = j.at("truncation").get<int>();
        validate(adv.params);
        return adv;
    }
    raise(errc::parse_error, "unknown curve kind: " + kind);
}

Json error_to_json(const error& e) {
    return Json{{"error", Json{{"code", errc_name(e.code())}, {"message", e.what()}}}};
}

} // namespace cdim
