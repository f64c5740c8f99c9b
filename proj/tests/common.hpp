#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "astz/io.hpp"

#ifndef ASTZ_TEST_DATA
#error "ASTZ_TEST_DATA must point at tests/data"
#endif

namespace testdata {

inline std::string path(const std::string& name) { return std::string(ASTZ_TEST_DATA) + "/" + name; }

inline astz::json load(const std::string& name) {
    std::ifstream in(path(name));
    return astz::json::parse(in);
}

inline astz::Astz figure1() { return astz::astz_from_json(load("figure1.json")); }
inline astz::Astz figure2() { return astz::astz_from_json(load("figure2.json")); }

inline std::vector<std::pair<astz::Csspp, astz::Astz>> table1() {
    std::ifstream in(path("table1.jsonl"));
    std::vector<std::pair<astz::Csspp, astz::Astz>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = astz::json::parse(line);
        out.emplace_back(astz::csspp_from_json(j["partition"]), astz::astz_from_json(j["astz"]));
    }
    return out;
}

inline std::string table1_text() {
    std::ifstream in(path("table1.jsonl"));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testdata
