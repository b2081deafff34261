#include "ifsecon/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ifsecon/errors.hpp"

namespace ifsecon::io {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("not a number: '" + s + "'");
    }
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    require(used == s.size(), "not a number: '" + s + "'");
    return v;
}

std::int64_t parse_int(const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("not an integer: '" + s + "'");
    }
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    require(used == s.size(), "not an integer: '" + s + "'");
    return v;
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

State state_from(const json& arr, int dim, const char* what) {
    require(arr.is_array() && static_cast<int>(arr.size()) == dim,
            std::string(what) + " must be an array of length " + std::to_string(dim));
    State s{0.0, 0.0};
    for (int k = 0; k < dim; ++k) s[k] = arr.at(k).get<double>();
    return s;
}

std::vector<double> doubles_from(const json& arr, const char* what) {
    require(arr.is_array(), std::string(what) + " must be an array");
    std::vector<double> out;
    for (const auto& v : arr) out.push_back(v.get<double>());
    return out;
}

// Runs a parser, reporting JSON type and key errors as invalid input.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

IfsSystem ifs_from_json(const json& j) {
    return guarded([&] {
        require(j.is_object(), "IFS spec must be a JSON object");
        const int dim = j.at("dim").get<int>();
        require(dim == 1 || dim == 2, "IFS spec: dim must be 1 or 2");
        const auto& bb = j.at("bounding_box");
        require(bb.is_array() && bb.size() == 2, "IFS spec: bounding_box must be [[lo..], [hi..]]");
        const Box box{dim, state_from(bb.at(0), dim, "bounding_box lo"),
                      state_from(bb.at(1), dim, "bounding_box hi")};

        const auto& jm = j.at("maps");
        require(jm.is_array(), "IFS spec: maps must be an array");
        std::vector<AffineMap> maps;
        for (const auto& m : jm) {
            const auto& rows = m.at("matrix");
            require(rows.is_array() && static_cast<int>(rows.size()) == dim,
                    "IFS spec: matrix must have dim rows");
            Matrix mat{};
            for (int r = 0; r < dim; ++r) {
                const State row = state_from(rows.at(r), dim, "matrix row");
                for (int c = 0; c < dim; ++c) mat[r][c] = row[c];
            }
            maps.emplace_back(dim, mat, state_from(m.at("offset"), dim, "offset"));
        }

        std::optional<ProbVector> pi;
        if (j.contains("pi") && !j.at("pi").is_null()) pi = ProbVector(doubles_from(j.at("pi"), "pi"));

        std::vector<State> region;
        if (j.contains("region") && !j.at("region").is_null()) {
            for (const auto& v : j.at("region")) region.push_back(state_from(v, 2, "region vertex"));
        }
        return IfsSystem(std::move(maps), box, std::move(pi), std::move(region));
    });
}

json ifs_to_json(const IfsSystem& sys) {
    const int dim = sys.dim();
    auto vec = [dim](const State& s) {
        json a = json::array();
        for (int k = 0; k < dim; ++k) a.push_back(s[k]);
        return a;
    };
    json j;
    j["dim"] = dim;
    j["bounding_box"] = json::array({vec(sys.bounding_box().lo), vec(sys.bounding_box().hi)});
    json maps = json::array();
    for (const auto& m : sys.maps()) {
        json rows = json::array();
        for (int r = 0; r < dim; ++r) {
            json row = json::array();
            for (int c = 0; c < dim; ++c) row.push_back(m.matrix()[r][c]);
            rows.push_back(row);
        }
        maps.push_back({{"matrix", rows}, {"offset", vec(m.offset())}});
    }
    j["maps"] = maps;
    if (sys.pi()) {
        j["pi"] = std::vector<double>(sys.pi()->weights().begin(), sys.pi()->weights().end());
    }
    if (sys.has_region()) {
        json region = json::array();
        for (const State& v : sys.region()) region.push_back(vec(v));
        j["region"] = region;
    }
    return j;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
    }
}

IfsSystem load_ifs(const std::string& path) { return ifs_from_json(load_json(path)); }

void write_box_set(std::ostream& out, const BoxSet& b) {
    out << format_double(b.epsilon());
    for (int k = 0; k < b.dim(); ++k) out << ',' << format_double(b.origin()[k]);
    out << '\n';
    for (const Cell& c : b.cells()) {
        out << c[0];
        if (b.dim() == 2) out << ',' << c[1];
        out << '\n';
    }
}

BoxSet read_box_set(std::istream& in) {
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), "box set CSV: missing header line");
    const auto head = split_csv(line);
    require(head.size() == 2 || head.size() == 3, "box set CSV: header must be epsilon,origin");
    const int dim = static_cast<int>(head.size()) - 1;
    State origin{0.0, 0.0};
    for (int k = 0; k < dim; ++k) origin[k] = parse_double(head[static_cast<std::size_t>(k) + 1]);
    std::vector<Cell> cells;
    while (std::getline(in, line)) {
        if (blank(line)) continue;
        const auto f = split_csv(line);
        require(static_cast<int>(f.size()) == dim, "box set CSV: cell tuple has wrong length");
        Cell c{0, 0};
        for (int k = 0; k < dim; ++k) c[k] = parse_int(f[static_cast<std::size_t>(k)]);
        cells.push_back(c);
    }
    return BoxSet(dim, parse_double(head[0]), origin, std::move(cells));
}

void write_point_cloud(std::ostream& out, const PointCloud& cloud) {
    for (const State& p : cloud.points) {
        out << format_double(p[0]);
        if (cloud.dim == 2) out << ',' << format_double(p[1]);
        out << '\n';
    }
}

PointCloud read_point_cloud(std::istream& in) {
    PointCloud cloud{0, {}};
    std::string line;
    while (std::getline(in, line)) {
        if (blank(line)) continue;
        const auto f = split_csv(line);
        require(f.size() == 1 || f.size() == 2, "point CSV: rows must have 1 or 2 columns");
        if (cloud.dim == 0) cloud.dim = static_cast<int>(f.size());
        require(static_cast<int>(f.size()) == cloud.dim, "point CSV: inconsistent column count");
        State p{0.0, 0.0};
        for (std::size_t k = 0; k < f.size(); ++k) p[k] = parse_double(f[k]);
        cloud.points.push_back(p);
    }
    if (cloud.dim == 0) cloud.dim = 1;
    return cloud;
}

void write_growth_path(std::ostream& out, const econ::GrowthPath& path) {
    out << "n,k,y,c,i,xi\n";
    for (std::size_t n = 0; n < path.k.size(); ++n) {
        out << n << ',' << format_double(path.k[n]) << ',' << format_double(path.y[n]) << ','
            << format_double(path.c[n]) << ',' << format_double(path.i[n]) << ','
            << format_double(path.xi[n]) << '\n';
    }
}

json dimension_report_to_json(const DimensionReport& r) {
    json counts = json::array();
    for (const auto& [eps, n] : r.counts) counts.push_back(json::array({eps, n}));
    json j;
    j["slope"] = r.slope;
    j["intercept"] = r.intercept;
    j["r_squared"] = r.r_squared ? json(*r.r_squared) : json(nullptr);
    j["upper_est"] = r.upper_est;
    j["lower_est"] = r.lower_est;
    j["counts"] = counts;
    return j;
}

econ::GrowthParams growth_params_from_json(const json& j) {
    return guarded([&] {
        return econ::GrowthParams(j.at("rho").get<double>(), j.at("lambda_a").get<double>(),
                                  j.at("lambda_b").get<double>(), j.at("q").get<double>());
    });
}

json growth_params_to_json(const econ::GrowthParams& g) {
    return {{"rho", g.rho}, {"lambda_a", g.lambda_a}, {"lambda_b", g.lambda_b}, {"q", g.q}};
}

econ::MultiplicativeUtilityParams multiplicative_params_from_json(const json& j) {
    return guarded([&] {
        return econ::MultiplicativeUtilityParams(doubles_from(j.at("rhos"), "rhos"),
                                                 ProbVector(doubles_from(j.at("pi"), "pi")),
                                                 j.at("k0").get<double>());
    });
}

econ::AffineUtilityParams affine_params_from_json(const json& j) {
    return guarded([&] {
        return econ::AffineUtilityParams(j.at("rho").get<double>(), doubles_from(j.at("rs"), "rs"),
                                         ProbVector(doubles_from(j.at("pi"), "pi")),
                                         j.at("k0").get<double>());
    });
}

}  // namespace ifsecon::io
