#include "ht/json_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ht {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void append_helem(std::ostringstream& os, const HElem& q) {
    os << "{\"t\":" << format_double(q.t()) << ",\"a\":[" << format_double(q.a().real()) << ","
       << format_double(q.a().imag()) << "],\"b\":[" << format_double(q.b().real()) << ","
       << format_double(q.b().imag()) << "]}";
}

HElem parse_helem(const json& j) {
    const Scale s(j.at("t").get<double>());
    const auto& a = j.at("a");
    const auto& b = j.at("b");
    return {s,
            {a.at(0).get<double>(), a.at(1).get<double>()},
            {b.at(0).get<double>(), b.at(1).get<double>()}};
}

HMatrix parse_hmatrix(const json& j) {
    const Scale s(j.at("t").get<double>());
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    std::vector<HElem> entries;
    for (const auto& e : j.at("entries")) entries.push_back(parse_helem(e));
    return {s, rows, cols, std::move(entries)};
}

} // namespace

std::string to_json(const HElem& q) {
    std::ostringstream os;
    append_helem(os, q);
    return os.str();
}

std::string to_json(const HMatrix& m) {
    std::ostringstream os;
    os << "{\"t\":" << format_double(m.scale().t()) << ",\"rows\":" << m.rows()
       << ",\"cols\":" << m.cols() << ",\"entries\":[";
    bool first = true;
    for (const HElem& e : m.entries()) {
        if (!first) os << ",";
        first = false;
        append_helem(os, e);
    }
    os << "]}";
    return os.str();
}

std::string to_json(const PowerSeries& f) {
    std::ostringstream os;
    os << "{\"t\":" << format_double(f.scale().t()) << ",\"trunc\":" << f.trunc()
       << ",\"coeffs\":[";
    bool first = true;
    for (const HElem& c : f.coeffs()) {
        if (!first) os << ",";
        first = false;
        append_helem(os, c);
    }
    os << "]}";
    return os.str();
}

std::string to_json(const Realization& r) {
    std::ostringstream os;
    os << "{\"t\":" << format_double(r.scale().t()) << ",\"n\":" << r.state_dim()
       << ",\"m\":" << r.in_dim() << ",\"p\":" << r.out_dim() << ",\"A\":" << to_json(r.A)
       << ",\"B\":" << to_json(r.B) << ",\"C\":" << to_json(r.C) << ",\"D\":" << to_json(r.D)
       << "}";
    return os.str();
}

HElem helem_from_json(const std::string& text) { return parse_helem(json::parse(text)); }

HMatrix hmatrix_from_json(const std::string& text) { return parse_hmatrix(json::parse(text)); }

PowerSeries series_from_json(const std::string& text) {
    const json j = json::parse(text);
    const Scale s(j.at("t").get<double>());
    std::vector<HElem> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_helem(c));
    PowerSeries f(s, std::move(coeffs));
    if (j.contains("trunc")) return f.truncated(j.at("trunc").get<int>());
    return f;
}

Realization realization_from_json(const std::string& text) {
    const json j = json::parse(text);
    return {parse_hmatrix(j.at("A")), parse_hmatrix(j.at("B")), parse_hmatrix(j.at("C")),
            parse_hmatrix(j.at("D"))};
}

std::vector<HElem> helem_list_from_json(const std::string& text) {
    const json j = json::parse(text);
    std::vector<HElem> out;
    if (j.is_array())
        for (const auto& e : j) out.push_back(parse_helem(e));
    else
        out.push_back(parse_helem(j));
    return out;
}

} // namespace ht
