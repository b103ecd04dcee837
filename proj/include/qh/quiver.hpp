#pragma once

#include "qh/error.hpp"
#include "qh/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace qh {

struct Arrow {
    std::string name;
    int source = 0; // vertex index
    int target = 0;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices,
           std::vector<std::tuple<std::string, std::string, std::string>> arrows) {
        for (const auto& v : vertices) add_vertex(v);
        for (const auto& [name, from, to] : arrows) add_arrow(name, from, to);
    }

    void add_vertex(const std::string& label) {
        if (vertex_index_.count(label)) throw err_malformed_relation("duplicate vertex label '" + label + "'");
        vertex_index_[label] = static_cast<int>(vertices_.size());
        vertices_.push_back(label);
    }

    void add_arrow(const std::string& name, const std::string& from, const std::string& to) {
        if (arrow_index_.count(name)) throw err_malformed_relation("duplicate arrow name '" + name + "'");
        arrow_index_[name] = static_cast<int>(arrows_.size());
        arrows_.push_back({name, vertex(from), vertex(to)});
    }

    int vertex(const std::string& label) const {
        auto it = vertex_index_.find(label);
        if (it == vertex_index_.end()) throw err_malformed_relation("unknown vertex '" + label + "'");
        return it->second;
    }

    int arrow(const std::string& name) const {
        auto it = arrow_index_.find(name);
        if (it == arrow_index_.end()) throw err_malformed_relation("unknown arrow '" + name + "'");
        return it->second;
    }

    size_t num_vertices() const { return vertices_.size(); }
    size_t num_arrows() const { return arrows_.size(); }
    const std::string& vertex_label(int i) const { return vertices_[i]; }
    const std::vector<std::string>& vertex_labels() const { return vertices_; }
    const Arrow& arrow_data(int i) const { return arrows_[i]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    Quiver reversed() const {
        Quiver q;
        q.vertices_ = vertices_;
        q.vertex_index_ = vertex_index_;
        for (const auto& a : arrows_) {
            q.arrow_index_[a.name] = static_cast<int>(q.arrows_.size());
            q.arrows_.push_back({a.name, a.target, a.source});
        }
        return q;
    }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
        for (size_t i = 0; i < a.arrows_.size(); ++i) {
            const Arrow &x = a.arrows_[i], &y = b.arrows_[i];
            if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
        }
        return true;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_index_;
    std::map<std::string, int> arrow_index_;
};

// One summand of a relation: coefficient times a composable arrow sequence.
// Paths compose left to right: in a1.a2 the arrow a1 is traversed first, and
// the product requires target(a1) = source(a2). This convention is global.
struct PathTerm {
    Rational coef;
    std::vector<int> arrows; // arrow indices, traversal order
};

struct RelationElement {
    std::vector<PathTerm> terms;
};

} // namespace qh
