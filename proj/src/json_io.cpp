#include "qh/json_io.hpp"

#include "qh/error.hpp"

namespace qh {

Json algebra_to_json(const AlgebraPtr& a) {
    Json j;
    j["vertices"] = a->quiver().vertex_labels();
    Json arrows = Json::array();
    for (const auto& ar : a->quiver().arrows()) {
        Json e;
        e["name"] = ar.name;
        e["from"] = a->quiver().vertex_label(ar.source);
        e["to"] = a->quiver().vertex_label(ar.target);
        arrows.push_back(e);
    }
    j["arrows"] = arrows;
    Json rels = Json::array();
    for (const auto& rel : a->relations()) {
        Json terms = Json::array();
        for (const auto& t : rel.terms) {
            Json term;
            term["coef"] = t.coef.to_string();
            Json path = Json::array();
            for (int arr : t.arrows) path.push_back(a->quiver().arrow_data(arr).name);
            term["path"] = path;
            terms.push_back(term);
        }
        rels.push_back(terms);
    }
    j["relations"] = rels;
    j["lengthCap"] = a->length_cap();
    return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
    Quiver q;
    for (const auto& v : j.at("vertices")) q.add_vertex(v.get<std::string>());
    for (const auto& e : j.at("arrows"))
        q.add_arrow(e.at("name").get<std::string>(), e.at("from").get<std::string>(), e.at("to").get<std::string>());
    std::vector<RelationElement> rels;
    if (j.contains("relations")) {
        for (const auto& terms : j.at("relations")) {
            RelationElement rel;
            for (const auto& term : terms) {
                PathTerm t;
                t.coef = Rational::from_string(term.at("coef").get<std::string>());
                for (const auto& name : term.at("path")) t.arrows.push_back(q.arrow(name.get<std::string>()));
                rel.terms.push_back(std::move(t));
            }
            rels.push_back(std::move(rel));
        }
    }
    int cap = j.contains("lengthCap") ? j.at("lengthCap").get<int>() : 12;
    return BoundQuiverAlgebra::build(std::move(q), std::move(rels), cap);
}

Json module_to_json(const Representation& m, bool inline_algebra) {
    Json j;
    if (inline_algebra)
        j["algebra"] = algebra_to_json(m.algebra());
    else
        j["algebra"] = content_hash(algebra_to_json(m.algebra()));
    Json dims;
    for (size_t v = 0; v < m.num_vertices(); ++v)
        dims[m.algebra()->quiver().vertex_label(static_cast<int>(v))] = m.dim_at(static_cast<int>(v));
    j["dims"] = dims;
    Json arrows;
    for (size_t a = 0; a < m.algebra()->quiver().num_arrows(); ++a) {
        const Matrix& mat = m.arrow_action(static_cast<int>(a));
        Json rows = Json::array();
        for (size_t r = 0; r < mat.rows(); ++r) {
            Json row = Json::array();
            for (size_t c = 0; c < mat.cols(); ++c) row.push_back(mat.at(r, c).to_string());
            rows.push_back(row);
        }
        arrows[m.algebra()->quiver().arrow_data(static_cast<int>(a)).name] = rows;
    }
    j["arrows"] = arrows;
    return j;
}

Representation module_from_json(const Json& j, const AlgebraPtr& a) {
    if (j.contains("algebra") && j.at("algebra").is_string()) {
        std::string expect = content_hash(algebra_to_json(a));
        if (j.at("algebra").get<std::string>() != expect)
            throw err_mismatch("module references a different algebra (hash mismatch)");
    }
    const Quiver& q = a->quiver();
    std::vector<int> dims(q.num_vertices(), 0);
    for (const auto& [label, d] : j.at("dims").items()) dims[q.vertex(label)] = d.get<int>();
    std::vector<Matrix> acts;
    for (size_t ar = 0; ar < q.num_arrows(); ++ar) {
        const Arrow& arr = q.arrow_data(static_cast<int>(ar));
        Matrix mat(dims[arr.target], dims[arr.source]);
        if (j.at("arrows").contains(arr.name)) {
            const Json& rows = j.at("arrows").at(arr.name);
            if (rows.size() != mat.rows()) throw err_dimension("module json: row count for arrow " + arr.name);
            for (size_t r = 0; r < mat.rows(); ++r) {
                if (rows[r].size() != mat.cols()) throw err_dimension("module json: col count for arrow " + arr.name);
                for (size_t c = 0; c < mat.cols(); ++c)
                    mat.at(r, c) = Rational::from_string(rows[r][c].get<std::string>());
            }
        }
        acts.push_back(std::move(mat));
    }
    return Representation(a, std::move(dims), std::move(acts));
}

Json order_to_json(const StratOrder& o, const AlgebraPtr& a) {
    Json pairs = Json::array();
    for (const auto& [x, y] : o.generator_pairs()) {
        Json p = Json::array();
        p.push_back(a->quiver().vertex_label(x));
        p.push_back(a->quiver().vertex_label(y));
        pairs.push_back(p);
    }
    Json j;
    j["pairs"] = pairs;
    return j;
}

StratOrder order_from_json(const Json& j, const AlgebraPtr& a) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("pairs"))
        pairs.emplace_back(a->quiver().vertex(p.at(0).get<std::string>()),
                           a->quiver().vertex(p.at(1).get<std::string>()));
    return StratOrder(a->quiver().num_vertices(), std::move(pairs));
}

std::string content_hash(const Json& j) {
    std::string dump = j.dump();
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace qh
