#include "ribbonres/report.hpp"

#include <sstream>

namespace ribbonres {

json Report::to_json(bool timing) const {
    json arr = json::array();
    for (auto& c : items) {
        json line;
        line["check"] = c.check;
        line["anchor"] = c.anchor;
        line["params"] = c.params;
        line["expected"] = c.expected;
        line["computed"] = c.computed;
        line["status"] = c.pass ? "pass" : "fail";
        line["millis"] = timing ? c.millis : 0;
        arr.push_back(std::move(line));
    }
    return arr;
}

namespace {
std::string csv_escape(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}
std::string flat(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}
}  // namespace

std::string Report::to_csv(bool timing) const {
    std::ostringstream os;
    os << "check,anchor,params,expected,computed,status,millis\n";
    for (auto& c : items) {
        os << csv_escape(c.check) << ',' << csv_escape(c.anchor) << ','
           << csv_escape(flat(c.params)) << ',' << csv_escape(flat(c.expected)) << ','
           << csv_escape(flat(c.computed)) << ',' << (c.pass ? "pass" : "fail") << ','
           << (timing ? c.millis : 0) << '\n';
    }
    return os.str();
}

}  // namespace ribbonres
