#pragma once

// Point-set ingestion (CSV and JSON) and the JSON report writer. Reports are
// serialized by hand with 17-significant-digit numbers and a fixed key order
// so identical runs produce identical bytes.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oriented/geometry.hpp"

namespace oriented {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<Point> parse_points_csv(std::istream& in) {
    std::vector<Point> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        double x, y;
        char extra;
        std::istringstream ls(line);
        char comma = 0;
        if (!(ls >> x >> comma >> y) || comma != ',' || (ls >> extra))
            throw ParseError("line " + std::to_string(lineno) + ": expected 'x,y'");
        if (!std::isfinite(x) || !std::isfinite(y))
            throw ParseError("line " + std::to_string(lineno) + ": non-finite coordinate");
        pts.push_back({x, y});
    }
    if (pts.empty()) throw ParseError("no points in input");
    return pts;
}

inline std::vector<Point> parse_points_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        throw ParseError("expected {\"points\": [[x,y],...]}");
    std::vector<Point> pts;
    for (const auto& item : doc["points"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
            !item[1].is_number())
            throw ParseError("each point must be a [x, y] number pair");
        Point p{item[0].get<double>(), item[1].get<double>()};
        if (!is_finite(p)) throw ParseError("non-finite coordinate");
        pts.push_back(p);
    }
    if (pts.empty()) throw ParseError("no points in input");
    return pts;
}

inline std::vector<Point> load_points(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::string fmt = format;
    if (fmt.empty()) {
        auto dotpos = path.rfind('.');
        std::string ext = dotpos == std::string::npos ? "" : path.substr(dotpos + 1);
        fmt = ext == "json" ? "json" : "csv";
    }
    if (fmt == "json") return parse_points_json(in);
    if (fmt == "csv") return parse_points_csv(in);
    throw ParseError("unknown format: " + fmt);
}

/// Minimal ordered JSON writer; numbers carry 17 significant digits.
class JsonWriter {
  public:
    static std::string number(double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }

    void begin_object() {
        sep();
        out_ += '{';
        fresh_ = true;
    }
    void end_object() {
        out_ += '}';
        fresh_ = false;
    }
    void begin_array() {
        sep();
        out_ += '[';
        fresh_ = true;
    }
    void end_array() {
        out_ += ']';
        fresh_ = false;
    }
    void key(const std::string& k) {
        sep();
        out_ += '"' + k + "\":";
        fresh_ = true;
    }
    void value(double v) {
        sep();
        out_ += number(v);
        fresh_ = false;
    }
    void value(std::size_t v) {
        sep();
        out_ += std::to_string(v);
        fresh_ = false;
    }
    void value(int v) {
        sep();
        out_ += std::to_string(v);
        fresh_ = false;
    }
    void value(bool v) {
        sep();
        out_ += v ? "true" : "false";
        fresh_ = false;
    }
    void value(const std::string& s) {
        sep();
        out_ += '"';
        for (char c : s) {
            if (c == '"' || c == '\\') out_ += '\\';
            out_ += c;
        }
        out_ += '"';
        fresh_ = false;
    }
    void null() {
        sep();
        out_ += "null";
        fresh_ = false;
    }

    const std::string& str() const { return out_; }

  private:
    void sep() {
        if (!fresh_ && !out_.empty()) {
            char last = out_.back();
            if (last != '{' && last != '[' && last != ':') out_ += ',';
        }
        fresh_ = false;
    }

    std::string out_;
    bool fresh_ = true;
};

}  // namespace oriented
