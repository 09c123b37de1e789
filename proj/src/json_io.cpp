#include "ferrers/json_io.hpp"

namespace ferrers {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const OddFerrersGraph& g)
{
    return json{{"shape", g.shape().parts()},
                {"size", g.size()},
                {"rows", g.rows()},
                {"cols", g.cols()},
                {"sharp", g.sharp()}};
}

json to_json(const LaurentSeries& f)
{
    json out = json::array();
    for (const auto& [d, poly] : f.terms()) {
        json terms = json::array();
        for (const auto& [key, c] : poly.terms())
            terms.push_back(json{{"y", key.first}, {"z", key.second}, {"c", c.str()}});
        out.push_back(json{{"q", d}, {"terms", std::move(terms)}});
    }
    return out;
}

json to_json(const VerificationReport& r)
{
    json out{{"name", r.name}, {"order", r.order}, {"pass", r.pass}};
    if (r.first_discrepancy) {
        const auto& d = *r.first_discrepancy;
        out["discrepancy"] = json{{"q", d.q},
                                  {"y", d.y},
                                  {"z", d.z},
                                  {"lhs", d.lhs.str()},
                                  {"rhs", d.rhs.str()}};
    }
    return out;
}

json to_json(const BijectionTrace& t)
{
    const char* kind = nullptr;
    switch (t.diffs.kind) {
        case DiffKind::omega_d: kind = "omega_d"; break;
        case DiffKind::omega_h: kind = "omega_h"; break;
        case DiffKind::nu_d: kind = "nu_d"; break;
        case DiffKind::nu_h: kind = "nu_h"; break;
    }
    json steps = json::array();
    for (size_t i = 0; i < t.diffs.values.size(); ++i)
        steps.push_back(json{{"step", i + 1},
                             {"object", t.partition_chain[i + 1].parts()},
                             {"delta", t.diffs.values[i]}});
    json shapes = json::array();
    for (const auto& s : t.shape_chain) shapes.push_back(s.parts());
    return json{{"kind", kind},
                {"start", t.partition_chain.front().parts()},
                {"terminal", t.partition_chain.back().parts()},
                {"steps", std::move(steps)},
                {"graph_shapes", std::move(shapes)}};
}

Partition partition_from_json(const json& j)
{
    return Partition(j.get<std::vector<int>>());
}

}  // namespace ferrers
