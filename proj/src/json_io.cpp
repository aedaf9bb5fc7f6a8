#include "bpcat/json_io.hpp"

namespace bpcat {

json to_json(const CycScalar& z) {
    json coeffs = json::array();
    for (const Rat& c : z.coeffs()) coeffs.push_back(rat_str(c));
    auto a = z.approx();
    return json{{"conductor", z.conductor()}, {"coeffs", coeffs}, {"approx", {a.real(), a.imag()}}};
}

CycScalar cyc_from_json(const json& j) {
    int n = j.at("conductor").get<int>();
    CycScalar z = CycScalar::zero(n);
    const auto& coeffs = j.at("coeffs");
    CycScalar acc = CycScalar::zero(n);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        Rat c = rat_parse(coeffs[k].get<std::string>());
        if (c != 0) acc += CycScalar::from_rat(c, n) * CycScalar::root_of_unity(n, (long)k);
    }
    return acc;
}

json to_json(const WeightModule& m) {
    json w = json::array();
    for (const Rat& x : m.weights) w.push_back(rat_str(x));
    auto mat = [&](const CMat& a) {
        json rows = json::array();
        for (int i = 0; i < a.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < a.cols(); ++j) row.push_back(to_json(a.at(i, j)));
            rows.push_back(row);
        }
        return rows;
    };
    return json{{"label", m.label}, {"p", m.p}, {"weights", w}, {"E", mat(m.E)}, {"F", mat(m.F)}};
}

json to_json(const Report& r) {
    return json{{"check", r.check},
                {"status", r.ok ? "pass" : "fail"},
                {"cases", r.cases},
                {"witness", r.failures},
                {"notes", r.notes}};
}

json to_json(const ExtLabel& l) { return json(l.str()); }
json to_json(const CatLabel& l) { return json(l.str()); }

json fusion_entry_json(const ExtLabel& a, const ExtLabel& b,
                       const std::vector<SummandScalar>& sc, int p) {
    json summands = json::array();
    for (const auto& s : sc) {
        DObject d{a.c + b.c, s.label};
        summands.push_back(json{{"label", induce(d, p).str()},
                                {"mult", s.mult},
                                {"braid_scalar", to_json(s.scalar)},
                                {"monodromy", to_json(s.monodromy_eig)},
                                {"nilpotent", s.nilpotent}});
    }
    return json{{"lhs", a.str()}, {"rhs", b.str()}, {"summands", summands}};
}

json smatrix_json(const std::vector<SS>& idx,
                  const std::function<CycScalar(const SS&, const SS&)>& entry) {
    json index = json::array();
    for (const SS& a : idx) index.push_back({a.s, a.sp});
    json entries = json::array();
    for (const SS& a : idx) {
        json row = json::array();
        for (const SS& b : idx) row.push_back(to_json(entry(a, b)));
        entries.push_back(row);
    }
    return json{{"index_set", index}, {"entries", entries}};
}

json structure_constants_json(int p, bool even0) {
    json out = json::array();
    for (const auto& [key, prod] : structure_constants(p, even0)) {
        json terms = json::array();
        for (const auto& [ss, k] : prod)
            terms.push_back(json{{"s", ss.s}, {"sp", ss.sp}, {"mult", k}});
        out.push_back(json{{"a", {key.first.s, key.first.sp}},
                           {"b", {key.second.s, key.second.sp}},
                           {"terms", terms}});
    }
    return out;
}

}  // namespace bpcat
