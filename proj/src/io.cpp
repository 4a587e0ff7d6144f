#include "sgc/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "sgc/error.hpp"

namespace sgc {

namespace {

auto split_words(std::string_view line) -> std::vector<std::string> {
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w) {
        words.push_back(w);
    }
    return words;
}

auto to_int(const std::string& word, int line) -> long long {
    try {
        std::size_t used = 0;
        const auto x = std::stoll(word, &used);
        if (used == word.size()) {
            return x;
        }
    } catch (const std::logic_error&) {
    }
    throw Error(Errc::parse, "line " + std::to_string(line) + ": expected an integer, got '" + word + "'", line);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++number;
        auto line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        const auto words = split_words(line);
        if (!words.empty() && words.front()[0] != '#') {
            fn(number, words);
        }
        pos = end + 1;
    }
}

} // namespace

auto parse_sg(std::string_view text) -> SgDocument {
    SgDocument doc;
    bool header = false;
    int last_line = 0;
    for_each_line(text, [&](int line, const std::vector<std::string>& w) {
        last_line = line;
        const auto fail = [line](const std::string& msg) {
            throw Error(Errc::parse, "line " + std::to_string(line) + ": " + msg, line);
        };
        if (!header) {
            if (w.size() != 2 || w[0] != "sg") {
                fail("expected header 'sg <n>'");
            }
            const auto n = to_int(w[1], line);
            if (n < 0 || n > 100000000) {
                fail("bad vertex count");
            }
            doc.graph = SignedGraph(static_cast<int>(n));
            header = true;
            return;
        }
        const int n = doc.graph.vertex_count();
        const auto index = [&](const std::string& word) {
            const auto x = to_int(word, line);
            if (x < 0 || x >= n) {
                fail("vertex index " + word + " out of range");
            }
            return static_cast<int>(x);
        };
        if (w[0] == "e") {
            if (w.size() != 4) {
                fail("expected 'e <u> <v> <+|->'");
            }
            const int u = index(w[1]);
            const int v = index(w[2]);
            if (w[3] != "+" && w[3] != "-") {
                fail("bad sign token '" + w[3] + "'");
            }
            doc.graph.add_edge(u, v, w[3] == "+" ? Sign::Positive : Sign::Negative);
        } else if (w[0] == "v") {
            if (w.size() != 3) {
                fail("expected 'v <idx> <name>'");
            }
            doc.names[index(w[1])] = w[2];
        } else {
            fail("unknown record '" + w[0] + "'");
        }
    });
    if (!header) {
        throw Error(Errc::parse, "missing header 'sg <n>'", last_line + 1);
    }
    return doc;
}

auto render_sg(const SignedGraph& g, const std::map<int, std::string>& names) -> std::string {
    std::ostringstream out;
    out << "sg " << g.vertex_count() << '\n';
    for (const auto& [v, name] : names) {
        out << "v " << v << ' ' << name << '\n';
    }
    for (const auto& e : g.edges()) {
        out << "e " << e.u << ' ' << e.v << ' ' << (e.sign == Sign::Positive ? '+' : '-') << '\n';
    }
    return out.str();
}

auto parse_coloring(std::string_view text) -> Coloring {
    Coloring c;
    bool header = false;
    std::map<long long, long long> entries;
    for_each_line(text, [&](int line, const std::vector<std::string>& w) {
        const auto fail = [line](const std::string& msg) {
            throw Error(Errc::parse, "line " + std::to_string(line) + ": " + msg, line);
        };
        if (!header) {
            if (w.size() != 2 || w[0] != "coloring") {
                fail("expected header 'coloring <p>/<q>'");
            }
            const auto slash = w[1].find('/');
            if (slash == std::string::npos) {
                fail("expected <p>/<q>");
            }
            c.p = to_int(w[1].substr(0, slash), line);
            c.q = to_int(w[1].substr(slash + 1), line);
            if (c.q < 1 || c.p % 2 != 0 || c.p < 2 * c.q) {
                fail("need even p >= 2q >= 2");
            }
            header = true;
            return;
        }
        if (w.size() != 2) {
            fail("expected '<idx> <color>'");
        }
        const auto idx = to_int(w[0], line);
        const auto color = to_int(w[1], line);
        if (color < 0 || color >= c.p) {
            throw Error(Errc::malformed, "line " + std::to_string(line) + ": color out of range", line);
        }
        if (!entries.emplace(idx, color).second) {
            fail("vertex " + w[0] + " listed twice");
        }
    });
    if (!header) {
        throw Error(Errc::parse, "missing header 'coloring <p>/<q>'", 1);
    }
    long long expect = 0;
    for (const auto& [idx, color] : entries) {
        if (idx != expect++) {
            throw Error(Errc::malformed, "coloring must list vertices 0..n-1 exactly once");
        }
        c.colors.push_back(color);
    }
    return c;
}

auto render_coloring(const Coloring& c) -> std::string {
    std::ostringstream out;
    out << "coloring " << c.p << '/' << c.q << '\n';
    for (std::size_t i = 0; i < c.colors.size(); ++i) {
        out << i << ' ' << c.colors[i] << '\n';
    }
    return out.str();
}

auto render_rational_coloring(const RationalColoring& c) -> std::string {
    std::ostringstream out;
    out << "rcoloring " << format_lowest(c.r) << '\n';
    for (std::size_t i = 0; i < c.colors.size(); ++i) {
        out << i << ' ' << format_lowest(c.colors[i]) << '\n';
    }
    return out.str();
}

auto read_file(const std::string& path) -> std::string {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::io, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::io, "cannot write " + path);
    }
    out << text;
    if (!out) {
        throw Error(Errc::io, "write failed for " + path);
    }
}

} // namespace sgc
