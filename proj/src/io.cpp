#include "mms/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mms::io {

using nlohmann::json;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        // trim whitespace
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    return out;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return in;
}

}  // namespace

Space read_points_csv(const std::string& path, double metric_exponent) {
    auto in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty points file: " + path);
    const auto header = split_csv_line(line);
    bool has_mass = !header.empty() && header.back() == "mass";
    const std::size_t dim = header.size() - (has_mass ? 1 : 0);
    if (dim == 0) throw std::invalid_argument("points file has no coordinate columns: " + path);

    std::vector<std::vector<double>> coords;
    std::vector<double> masses;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw std::invalid_argument("points file row width mismatch: " + path);
        std::vector<double> c(dim);
        for (std::size_t k = 0; k < dim; ++k) c[k] = std::stod(fields[k]);
        coords.push_back(std::move(c));
        if (has_mass) masses.push_back(std::stod(fields[dim]));
    }
    return build_from_points(coords, masses, metric_exponent);
}

Space read_graph_json(const std::string& path) {
    auto in = open_or_throw(path);
    json doc = json::parse(in);
    std::vector<GraphVertex> vertices;
    for (const auto& v : doc.at("vertices"))
        vertices.push_back({v.at("id").get<std::string>(), v.value("mass", 1.0)});
    std::vector<GraphEdge> edges;
    for (const auto& e : doc.at("edges"))
        edges.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                         e.at("w").get<double>()});
    return build_from_graph(vertices, edges);
}

void read_raw_matrix(const std::string& path, std::vector<double>& dist, std::size_t& n) {
    auto in = open_or_throw(path);
    std::string line;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        std::vector<double> row(fields.size());
        for (std::size_t k = 0; k < fields.size(); ++k) row[k] = std::stod(fields[k]);
        rows.push_back(std::move(row));
    }
    n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("matrix file is not square: " + path);
    dist.clear();
    dist.reserve(n * n);
    for (const auto& r : rows) dist.insert(dist.end(), r.begin(), r.end());
}

std::vector<double> read_mass_csv(const std::string& path) {
    auto in = open_or_throw(path);
    std::vector<double> masses;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        for (const auto& f : split_csv_line(line)) masses.push_back(std::stod(f));
    }
    return masses;
}

Space read_matrix_csv(const std::string& path, const std::string& mass_path, double tol_tri) {
    std::vector<double> dist;
    std::size_t n = 0;
    read_raw_matrix(path, dist, n);
    std::vector<double> masses;
    if (!mass_path.empty()) masses = read_mass_csv(mass_path);
    return build_from_matrix(dist, n, masses, tol_tri);
}

json net_to_json(const Space& space, const Net& net) {
    json centers = json::array();
    for (std::size_t c : net.centers) centers.push_back(space.ids()[c]);
    return json{{"epsilon", net.epsilon},
                {"centers", centers},
                {"covering_radius", net.covering_radius},
                {"separation", net.separation}};
}

json validation_to_json(const ValidationReport& rep) {
    json tv = json::array();
    for (const auto& v : rep.triangle_violations)
        tv.push_back({{"i", v.i}, {"j", v.j}, {"k", v.k}, {"defect", v.defect}});
    json zp = json::array();
    for (const auto& [i, j] : rep.zero_distance_pairs) zp.push_back({{"i", i}, {"j", j}});
    return json{{"symmetric", rep.symmetric},
                {"triangle_violations", tv},
                {"zero_distance_pairs", zp},
                {"negative_masses", rep.negative_masses},
                {"ok", rep.ok()}};
}

json regularity_to_json(const RegularityReport& rep) {
    return json{{"measure_doubling_D", rep.measure_doubling_D},
                {"metric_doubling_D1", rep.metric_doubling_D1},
                {"ahlfors_alpha", rep.ahlfors.alpha},
                {"ahlfors_C0", rep.ahlfors.C0},
                {"ahlfors_residual", rep.ahlfors.residual},
                {"uniform_perfectness_C5", rep.uniform_perfectness_C5},
                {"radii_grid", rep.radii_grid}};
}

json bg_to_json(const BGReport& rep) {
    json vs = json::array();
    for (const auto& v : rep.violations)
        vs.push_back({{"center", v.center},
                      {"r_small", v.r_small},
                      {"r_large", v.r_large},
                      {"ratio_small", v.ratio_small},
                      {"ratio_large", v.ratio_large}});
    return json{{"violations", vs}, {"tolerance", rep.tolerance}};
}

json bounds_to_json(const BoundsReport& rep) {
    return json{{"n1", rep.n1}, {"n2", rep.n2}, {"n3", rep.n3},
                {"epsilon", rep.epsilon}, {"C", rep.C}};
}

json distance_to_json(const DistanceResult& res) {
    return json{{"value", res.value}, {"method", res.method}, {"tolerance", res.tolerance}};
}

json discretization_to_json(const Space& space, const Discretization& d) {
    json cells = json::object();
    for (const auto& [center, members] : d.cells) {
        json m = json::array();
        for (std::size_t x : members) m.push_back(space.ids()[x]);
        cells[space.ids()[center]] = m;
    }
    return json{{"epsilon", d.net.epsilon},
                {"cells", cells},
                {"atomic_masses", d.atomic_masses}};
}

json nerve_to_json(const NerveComplex& nc) {
    json dims = json::array();
    for (const auto& level : nc.simplices_by_dim) {
        json l = json::array();
        for (const auto& s : level) l.push_back(s);
        dims.push_back(l);
    }
    return json{{"vertices", nc.vertices}, {"simplices_by_dim", dims}};
}

void write_quasimetric_csv(const std::string& path, const QuasimetricMatrix& q) {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < q.n; ++i) {
        for (std::size_t j = 0; j < q.n; ++j) {
            if (j) out << ',';
            out << q.values[i * q.n + j];
        }
        out << '\n';
    }
    write_text_atomic(path, out.str());
}

json quasimetric_sidecar(const QuasimetricMatrix& q) {
    const char* variant = q.variant == QVariant::general ? "general"
                          : q.variant == QVariant::euclidean_midpoint ? "euclidean_midpoint"
                                                                      : "plain_snowflake";
    return json{{"s", q.s}, {"K", q.quasi_constant_K}, {"variant", variant}};
}

std::string nerve_to_off(const NerveComplex& nc) {
    std::ostringstream out;
    out << "NERVE\n" << nc.vertices.size() << " vertices\n";
    for (std::size_t d = 1; d < nc.simplices_by_dim.size(); ++d) {
        out << "dim " << d << " (" << nc.simplices_by_dim[d].size() << ")\n";
        for (const auto& s : nc.simplices_by_dim[d]) {
            for (std::size_t k = 0; k < s.size(); ++k) out << (k ? " " : "") << s[k];
            out << '\n';
        }
    }
    return out.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file: " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

void write_coords_csv(const std::string& path, const std::vector<std::vector<double>>& coords) {
    std::ostringstream out;
    out.precision(17);
    if (!coords.empty()) {
        for (std::size_t k = 0; k < coords[0].size(); ++k) out << (k ? ",x" : "x") << k;
        out << '\n';
    }
    for (const auto& row : coords) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out << ',';
            out << row[k];
        }
        out << '\n';
    }
    write_text_atomic(path, out.str());
}

}  // namespace mms::io
