#include "panelopt/dat_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "panelopt/error.hpp"

namespace panelopt {

namespace {

constexpr double kClosureTolerance = 1e-6;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token, std::size_t line_no) {
    double value = 0.0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw Error(ErrorCode::MalformedFile,
                    "line " + std::to_string(line_no) + ": not a number: '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Airfoil read_dat(std::string_view text) {
    std::vector<Point2> pts;
    std::string name;
    bool have_name = false;
    std::size_t line_no = 0;

    while (!text.empty()) {
        const auto eol = text.find('\n');
        const auto line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (!have_name) {
            name = std::string(line);
            have_name = true;
            continue;
        }
        if (line.empty()) continue;

        std::vector<double> values;
        std::string_view rest = line;
        while (!rest.empty()) {
            const auto start = rest.find_first_not_of(" \t");
            if (start == std::string_view::npos) break;
            rest = rest.substr(start);
            const auto stop = rest.find_first_of(" \t");
            values.push_back(parse_number(rest.substr(0, stop), line_no));
            rest = stop == std::string_view::npos ? std::string_view{} : rest.substr(stop);
        }
        if (values.size() != 2) {
            throw Error(ErrorCode::MalformedFile,
                        "line " + std::to_string(line_no) + ": expected an x y pair");
        }
        pts.push_back({values[0], values[1]});
    }

    if (pts.size() < 5) {
        throw Error(ErrorCode::MalformedFile,
                    "need at least 5 coordinate pairs, found " + std::to_string(pts.size()));
    }

    const Point2 first = pts.front();
    const Point2 last = pts.back();
    if (norm(last - first) <= kClosureTolerance) {
        pts.back() = first;
    } else if (std::abs(last.x - first.x) <= kClosureTolerance) {
        // Both trailing edge nodes present but apart: a blunt, open contour.
        throw Error(ErrorCode::MalformedFile, "open trailing edge: endpoints differ by " +
                                                  std::to_string(norm(last - first)) + " chord");
    } else {
        pts.push_back(first);
    }

    try {
        return Airfoil(std::move(name), std::move(pts));
    } catch (const Error& e) {
        throw Error(ErrorCode::MalformedFile, e.what());
    }
}

std::string write_dat(const Airfoil& airfoil) {
    std::string out = airfoil.name() + "\n";
    char buf[64];
    for (const auto& p : airfoil.points()) {
        std::snprintf(buf, sizeof buf, "%.9g %.9g\n", p.x, p.y);
        out += buf;
    }
    return out;
}

Airfoil read_dat_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedFile, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_dat(ss.str());
}

void write_dat_file(const std::filesystem::path& path, const Airfoil& airfoil) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
    out << write_dat(airfoil);
}

}  // namespace panelopt
