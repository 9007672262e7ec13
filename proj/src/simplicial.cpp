#include "conint/simplicial.hpp"

#include <algorithm>
#include <complex>
#include <istream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace conint {

namespace {

std::array<int, 3> sorted3(std::array<int, 3> a) {
    std::sort(a.begin(), a.end());
    return a;
}

std::array<int, 4> sorted4(std::array<int, 4> a) {
    std::sort(a.begin(), a.end());
    return a;
}

int shared_vertices(const std::array<int, 4>& a, const std::array<int, 4>& b) {
    int n = 0;
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) ++n;
    return n;
}

std::string tuple_str(const int* v, int n) {
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

void validate_leaf(const LeafComplex3& leaf) {
    if (leaf.vertices.empty())
        throw std::invalid_argument("leaf: vertex list is empty");
    if (leaf.tetrahedra.empty())
        throw std::invalid_argument("leaf: no tetrahedra");

    std::map<int, int> pos;
    for (std::size_t k = 0; k < leaf.vertices.size(); ++k)
        if (!pos.emplace(leaf.vertices[k], static_cast<int>(k)).second)
            throw std::invalid_argument("leaf: duplicate vertex label " +
                                        std::to_string(leaf.vertices[k]));

    std::map<std::array<int, 3>, std::vector<int>> face_owners;
    for (std::size_t t = 0; t < leaf.tetrahedra.size(); ++t) {
        std::array<int, 4> p{};
        for (int i = 0; i < 4; ++i) {
            auto it = pos.find(leaf.tetrahedra[t][i]);
            if (it == pos.end())
                throw std::invalid_argument("leaf: tetrahedron references unknown label " +
                                            std::to_string(leaf.tetrahedra[t][i]));
            p[i] = it->second;
        }
        std::sort(p.begin(), p.end());
        if (std::adjacent_find(p.begin(), p.end()) != p.end())
            throw std::invalid_argument("leaf: tetrahedron with repeated vertex");
        for (int drop = 0; drop < 4; ++drop) {
            std::array<int, 3> f{};
            for (int i = 0, k = 0; i < 4; ++i)
                if (i != drop) f[k++] = p[i];
            face_owners[f].push_back(static_cast<int>(t));
        }
    }

    for (const auto& [f, owners] : face_owners)
        if (owners.size() > 2)
            throw std::invalid_argument("leaf: non-manifold, face " +
                                        tuple_str(f.data(), 3) + " shared by " +
                                        std::to_string(owners.size()) + " tetrahedra");

    // connectivity through shared faces
    const std::size_t nt = leaf.tetrahedra.size();
    std::vector<char> seen(nt, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    std::map<int, std::vector<int>> adj;
    for (const auto& [f, owners] : face_owners)
        if (owners.size() == 2) {
            adj[owners[0]].push_back(owners[1]);
            adj[owners[1]].push_back(owners[0]);
        }
    while (!bfs.empty()) {
        int t = bfs.front();
        bfs.pop();
        for (int u : adj[t])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                bfs.push(u);
            }
    }
    if (reached != nt)
        throw std::invalid_argument("leaf: tetrahedra not connected through shared faces");
}

LeafComplex3 read_leaf(std::istream& in) {
    // strip '#' comments, then tokenize
    std::string text, line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        text += line + "\n";
    }
    std::istringstream ts(text);

    LeafComplex3 leaf;
    std::string kw;
    long n = 0;
    if (!(ts >> kw >> n) || kw != "vertices" || n <= 0)
        throw std::invalid_argument("leaf file: expected 'vertices <count>'");
    leaf.vertices.resize(n);
    for (long i = 0; i < n; ++i)
        if (!(ts >> leaf.vertices[i]))
            throw std::invalid_argument("leaf file: truncated vertex list");
    if (!(ts >> kw >> n) || kw != "tetrahedra" || n <= 0)
        throw std::invalid_argument("leaf file: expected 'tetrahedra <count>'");
    leaf.tetrahedra.resize(n);
    for (long i = 0; i < n; ++i)
        for (int k = 0; k < 4; ++k)
            if (!(ts >> leaf.tetrahedra[i][k]))
                throw std::invalid_argument("leaf file: truncated tetrahedron list");
    std::string extra;
    if (ts >> extra)
        throw std::invalid_argument("leaf file: trailing content '" + extra + "'");
    return leaf;
}

int SimplicialComplex4::triangle_index(std::array<int, 3> verts) const {
    auto it = triangle_lookup.find(sorted3(verts));
    return it == triangle_lookup.end() ? -1 : it->second;
}

int SimplicialComplex4::tetra_index(std::array<int, 4> verts) const {
    auto it = tetra_lookup.find(sorted4(verts));
    return it == tetra_lookup.end() ? -1 : it->second;
}

SimplicialComplex4 build_prism_complex(const LeafComplex3& leaf, int n_leaves,
                                       const std::vector<int>& vertex_order) {
    validate_leaf(leaf);
    if (n_leaves < 2) throw std::domain_error("build_prism_complex: n_leaves must be >= 2");

    const int V = static_cast<int>(leaf.vertices.size());
    std::vector<int> rank(V);
    if (vertex_order.empty()) {
        for (int k = 0; k < V; ++k) rank[k] = k;
    } else {
        if (static_cast<int>(vertex_order.size()) != V)
            throw std::invalid_argument("build_prism_complex: vertex_order length mismatch");
        std::vector<char> hit(V, 0);
        for (int k = 0; k < V; ++k) {
            int s = vertex_order[k];
            if (s < 0 || s >= V || hit[s])
                throw std::invalid_argument("build_prism_complex: vertex_order not a permutation");
            hit[s] = 1;
            rank[s] = k;
        }
    }

    std::map<int, int> pos;
    for (int k = 0; k < V; ++k) pos.emplace(leaf.vertices[k], k);

    SimplicialComplex4 cx;
    cx.n_leaves = n_leaves;
    cx.leaf_size = V;
    for (int l = 0; l < n_leaves; ++l)
        for (int k = 0; k < V; ++k) cx.vertices.push_back({leaf.vertices[k], l});

    const auto leaf_of = [V](int id) { return id / V; };

    std::set<std::array<int, 4>> gauge_walls;
    for (int l = 0; l + 1 < n_leaves; ++l) {
        for (const auto& tet : leaf.tetrahedra) {
            std::array<int, 4> w{};
            for (int i = 0; i < 4; ++i) w[i] = pos.at(tet[i]);
            std::sort(w.begin(), w.end(),
                      [&rank](int a, int b) { return rank[a] < rank[b]; });

            const auto bottom = [&](int i) { return l * V + w[i]; };
            const auto top = [&](int i) { return (l + 1) * V + w[i]; };

            // staircase: sigma_i keeps w_0..w_i on the lower leaf
            std::array<std::array<int, 5>, 4> sigmas{};
            for (int i = 0; i < 4; ++i) {
                int k = 0;
                for (int a = 0; a <= i; ++a) sigmas[i][k++] = bottom(a);
                for (int a = i; a < 4; ++a) sigmas[i][k++] = top(a);
                std::sort(sigmas[i].begin(), sigmas[i].end());
                cx.four_simplices.push_back({sigmas[i]});
            }
            // interior walls between consecutive stair steps
            for (int i = 0; i + 1 < 4; ++i) {
                std::array<int, 4> wall{};
                int k = 0;
                for (int a = 0; a <= i; ++a) wall[k++] = bottom(a);
                for (int a = i + 1; a < 4; ++a) wall[k++] = top(a);
                gauge_walls.insert(sorted4(wall));
            }
        }
    }

    for (const auto& s : cx.four_simplices)
        for (int drop = 0; drop < 5; ++drop) {
            std::array<int, 4> f{};
            for (int i = 0, k = 0; i < 5; ++i)
                if (i != drop) f[k++] = s.v[i];
            f = sorted4(f);
            if (cx.tetra_lookup.emplace(f, static_cast<int>(cx.tetrahedra.size())).second)
                cx.tetrahedra.push_back({f, gauge_walls.count(f) > 0});
        }

    for (const auto& t : cx.tetrahedra)
        for (int drop = 0; drop < 4; ++drop) {
            std::array<int, 3> f{};
            for (int i = 0, k = 0; i < 4; ++i)
                if (i != drop) f[k++] = t.v[i];
            if (cx.triangle_lookup.emplace(f, static_cast<int>(cx.triangles.size())).second) {
                const bool spans = leaf_of(f[0]) != leaf_of(f[2]);
                cx.triangles.push_back({f, spans});
            }
        }

    std::set<std::array<int, 2>> edge_set;
    for (const auto& t : cx.triangles)
        for (int drop = 0; drop < 3; ++drop) {
            std::array<int, 2> e{};
            for (int i = 0, k = 0; i < 3; ++i)
                if (i != drop) e[k++] = t.v[i];
            if (edge_set.insert(e).second)
                cx.edges.push_back({e, leaf_of(e[0]) != leaf_of(e[1])});
        }

    return cx;
}

void validate_assignment(const SimplicialComplex4& cx, const ConnectionAssignment& assign,
                         double tol) {
    for (const auto& [t, omega] : assign.omega) {
        if (t < 0 || t >= static_cast<int>(cx.tetrahedra.size()))
            throw std::invalid_argument("assignment: tetrahedron index out of range");
        if (cx.tetrahedra[t].gauge &&
            (omega - So3cMatrix::Identity()).cwiseAbs().maxCoeff() > tol)
            throw std::invalid_argument(
                "assignment: gauge-fixed tetrahedron " + std::to_string(t) +
                " must carry the identity");
    }
}

So3cMatrix holonomy(const SimplicialComplex4& cx, const ConnectionAssignment& assign,
                    const std::vector<int>& chain) {
    if (chain.empty()) throw std::invalid_argument("holonomy: empty chain");
    const auto omega_of = [&](int t) -> const So3cMatrix& {
        if (t < 0 || t >= static_cast<int>(cx.tetrahedra.size()))
            throw std::invalid_argument("holonomy: tetrahedron index out of range");
        auto it = assign.omega.find(t);
        if (it == assign.omega.end())
            throw std::invalid_argument("holonomy: no connection on tetrahedron " +
                                        std::to_string(t));
        return it->second;
    };

    So3cMatrix r = So3cMatrix::Identity();
    omega_of(chain[0]);
    for (std::size_t k = 1; k < chain.size(); ++k) {
        if (shared_vertices(cx.tetrahedra[chain[k - 1]].v, cx.tetrahedra[chain[k]].v) != 3)
            throw std::invalid_argument(
                "holonomy: chain broken, tetrahedra " + std::to_string(chain[k - 1]) +
                " and " + std::to_string(chain[k]) + " share no triangle");
        r = r * (omega_of(chain[k - 1]).transpose() * omega_of(chain[k]));
    }
    return r;
}

namespace {

Complex sector_term(Complex coupling, const ComplexVec3& v, const So3cMatrix& plus_r_matrix) {
    const Complex v2 = v.dot(v);
    const double scale =
        std::norm(v.x) + std::norm(v.y) + std::norm(v.z);
    if (std::abs(v2) <= 1e-14 * scale || scale == 0.0)
        throw std::domain_error("degenerate");
    const Complex s = std::sqrt(v2);
    const Complex arg = v.dot(so3c_r(plus_r_matrix)) / s;
    return 0.5 * coupling * s * std::asin(arg);
}

}  // namespace

Complex action(const SimplicialComplex4& cx, const std::map<int, AreaBivector>& areas,
               const std::map<int, So3cMatrix>& curvatures, const CouplingConfig& cfg) {
    if (cfg.gamma == 0.0) throw std::domain_error("action: gamma must be nonzero");
    const Complex plus_coupling =
        cfg.euclidean ? Complex(1.0 + 1.0 / cfg.gamma) : Complex(1.0, 1.0 / cfg.gamma);
    const Complex minus_coupling =
        cfg.euclidean ? Complex(1.0 - 1.0 / cfg.gamma) : Complex(1.0, -1.0 / cfg.gamma);

    Complex s = 0.0;
    for (const auto& [t, bv] : areas) {
        if (t < 0 || t >= static_cast<int>(cx.triangles.size()))
            throw std::invalid_argument("action: triangle index out of range");
        auto rc = curvatures.find(t);
        if (rc == curvatures.end())
            throw std::invalid_argument("action: no curvature on triangle " +
                                        std::to_string(t));
        const auto& tri = cx.triangles[t].v;
        try {
            s += sector_term(plus_coupling, bv.plus_v, rc->second);
            s += sector_term(minus_coupling, bv.minus_v, rc->second.conjugate());
        } catch (const std::domain_error&) {
            throw std::domain_error("action: degenerate area on triangle " +
                                    std::to_string(t) + " " + tuple_str(tri.data(), 3));
        }
    }
    return s;
}

std::vector<int> f_set(const SimplicialComplex4& cx) {
    std::vector<int> out;
    for (std::size_t t = 0; t < cx.triangles.size(); ++t)
        if (cx.triangles[t].in_F) out.push_back(static_cast<int>(t));
    return out;
}

}  // namespace conint
