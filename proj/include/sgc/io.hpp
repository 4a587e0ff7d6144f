#pragma once

#include <map>
#include <string>
#include <string_view>

#include "sgc/certificates.hpp"
#include "sgc/core.hpp"
#include "sgc/solver.hpp"

namespace sgc {

struct SgDocument {
    SignedGraph graph;
    std::map<int, std::string> names;
};

auto parse_sg(std::string_view text) -> SgDocument;
auto render_sg(const SignedGraph& g, const std::map<int, std::string>& names = {}) -> std::string;

auto parse_coloring(std::string_view text) -> Coloring;
auto render_coloring(const Coloring& c) -> std::string;

auto render_rational_coloring(const RationalColoring& c) -> std::string;

auto read_file(const std::string& path) -> std::string;
void write_file(const std::string& path, std::string_view text);

} // namespace sgc
