#include "planch/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace planch {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double parse_double(std::string_view s, const char* what) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw Error(ErrorKind::Parse, std::string("malformed ") + what + " field '" +
                                          std::string(s) + "'");
    return v;
}

struct Row {
    double x;
    cplx v;
};

std::vector<Row> read_rows(std::istream& is, const std::string& expected_header) {
    std::string line;
    if (!std::getline(is, line))
        throw Error(ErrorKind::Parse, "empty input, expected header " + expected_header);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header)
        throw Error(ErrorKind::Parse, "expected header '" + expected_header +
                                          "', found '" + line + "'");
    std::vector<Row> rows;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = (c1 == std::string::npos) ? std::string::npos
                                                  : line.find(',', c1 + 1);
        if (c2 == std::string::npos)
            throw Error(ErrorKind::Parse, "expected three comma-separated fields: " + line);
        Row r;
        r.x = parse_double(std::string_view(line).substr(0, c1), "abscissa");
        r.v = cplx{parse_double(std::string_view(line).substr(c1 + 1, c2 - c1 - 1), "re"),
                   parse_double(std::string_view(line).substr(c2 + 1), "im")};
        rows.push_back(r);
    }
    if (rows.size() < 2) throw Error(ErrorKind::Parse, "need at least two samples");
    return rows;
}

void write_rows(std::ostream& os, const std::string& header,
                const std::vector<double>& x, const std::vector<cplx>& v) {
    os << header << '\n';
    for (std::size_t j = 0; j < x.size(); ++j)
        os << fmt(x[j]) << ',' << fmt(v[j].real()) << ',' << fmt(v[j].imag()) << '\n';
}

}  // namespace

void write_grid_function_csv(std::ostream& os, const GridFunction& f) {
    write_rows(os, "t,re,im", f.grid().points(), f.values());
}

GridFunction read_grid_function_csv(std::istream& is) {
    const auto rows = read_rows(is, "t,re,im");
    const std::size_t n = rows.size();
    UniformGrid grid;
    try {
        grid = UniformGrid(rows.back().x, n);
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, std::string("invalid grid geometry: ") + e.what());
    }
    const double tol = 1e-9 * std::max(1.0, grid.half_width);
    std::vector<cplx> vals(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(rows[j].x - grid.point(j)) > tol)
            throw Error(ErrorKind::Parse,
                        "samples are not on a uniform symmetric grid (row " +
                            std::to_string(j + 2) + ")");
        vals[j] = rows[j].v;
    }
    return GridFunction(grid, std::move(vals));
}

void write_half_line_csv(std::ostream& os, const HalfLineFunction& f) {
    std::vector<double> t(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) t[j] = f.grid().point(j);
    write_rows(os, "t,re,im", t, f.values());
}

HalfLineFunction read_half_line_csv(std::istream& is) {
    const auto rows = read_rows(is, "t,re,im");
    const std::size_t m = rows.size();
    std::vector<double> u(m);
    for (std::size_t j = 0; j < m; ++j) {
        if (!(rows[j].x > 0.0))
            throw Error(ErrorKind::Parse, "half-line abscissae must be positive");
        if (j > 0 && !(rows[j].x > rows[j - 1].x))
            throw Error(ErrorKind::Parse, "half-line abscissae must be strictly increasing");
        u[j] = std::log(rows[j].x);
    }
    // recover the log grid and validate log-uniform spacing
    const double u0 = u.front();
    const double delta = (u.back() - u0) / double(m - 1);
    const double tol = 1e-9 * std::max({1.0, std::abs(u.front()), std::abs(u.back())});
    for (std::size_t j = 0; j < m; ++j)
        if (std::abs(u[j] - (u0 + double(j) * delta)) > tol)
            throw Error(ErrorKind::Parse,
                        "samples are not log-uniform (row " + std::to_string(j + 2) + ")");
    std::vector<cplx> vals(m);
    for (std::size_t j = 0; j < m; ++j) vals[j] = rows[j].v;
    return HalfLineFunction(LogGrid(u0, delta, m), std::move(vals));
}

void write_critical_line_csv(std::ostream& os, const CriticalLineFunction& f) {
    std::vector<double> eta(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) eta[j] = f.grid().point(j);
    write_rows(os, "eta,re,im", eta, f.values());
}

CriticalLineFunction read_critical_line_csv(std::istream& is) {
    const auto rows = read_rows(is, "eta,re,im");
    const std::size_t m = rows.size();
    EtaGrid grid;
    try {
        grid = EtaGrid(rows.back().x, m);
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, std::string("invalid eta grid: ") + e.what());
    }
    const double tol = 1e-9 * std::max(1.0, grid.eta_max);
    std::vector<cplx> vals(m);
    for (std::size_t j = 0; j < m; ++j) {
        if (std::abs(rows[j].x - grid.point(j)) > tol)
            throw Error(ErrorKind::Parse,
                        "samples are not on a uniform symmetric eta grid (row " +
                            std::to_string(j + 2) + ")");
        vals[j] = rows[j].v;
    }
    return CriticalLineFunction(grid, std::move(vals));
}

std::string grid_function_to_json(const GridFunction& f) {
    json j;
    j["half_width"] = f.grid().half_width;
    j["n_points"] = f.grid().n_points;
    json vals = json::array();
    for (const cplx& v : f.values()) vals.push_back({v.real(), v.imag()});
    j["values"] = std::move(vals);
    return j.dump();
}

GridFunction grid_function_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        UniformGrid grid(j.at("half_width").get<double>(),
                         j.at("n_points").get<std::size_t>());
        std::vector<cplx> vals;
        for (const auto& pair : j.at("values"))
            vals.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
        return GridFunction(grid, std::move(vals));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("bad grid-function JSON: ") + e.what());
    }
}

std::string coefficients_to_json(const CoefficientVector& c) {
    json j = json::array();
    for (const cplx& v : c.coeffs) j.push_back({v.real(), v.imag()});
    return j.dump();
}

CoefficientVector coefficients_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        CoefficientVector c;
        for (const auto& pair : j)
            c.coeffs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
        return c;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("bad coefficient JSON: ") + e.what());
    }
}

void write_basis_csv(std::ostream& os, const HermiteBasis& basis) {
    os << 't';
    for (std::size_t n = 0; n < basis.size(); ++n) os << ",e" << n;
    os << '\n';
    const auto t = basis.grid().points();
    for (std::size_t j = 0; j < t.size(); ++j) {
        os << fmt(t[j]);
        for (std::size_t n = 0; n < basis.size(); ++n)
            os << ',' << fmt(basis.function(n)[j].real());
        os << '\n';
    }
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error(ErrorKind::Parse, "cannot open '" + path + "' for writing");
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error(ErrorKind::Parse, "cannot open '" + path + "' for reading");
    return is;
}

}  // namespace

void save_grid_function(const std::string& path, const GridFunction& f) {
    auto os = open_out(path);
    write_grid_function_csv(os, f);
}

GridFunction load_grid_function(const std::string& path) {
    auto is = open_in(path);
    return read_grid_function_csv(is);
}

void save_half_line(const std::string& path, const HalfLineFunction& f) {
    auto os = open_out(path);
    write_half_line_csv(os, f);
}

HalfLineFunction load_half_line(const std::string& path) {
    auto is = open_in(path);
    return read_half_line_csv(is);
}

void save_critical_line(const std::string& path, const CriticalLineFunction& f) {
    auto os = open_out(path);
    write_critical_line_csv(os, f);
}

CriticalLineFunction load_critical_line(const std::string& path) {
    auto is = open_in(path);
    return read_critical_line_csv(is);
}

}  // namespace planch
