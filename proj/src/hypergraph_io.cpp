#include "rcolor/hypergraph_io.hpp"

#include "rcolor/error.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace rcolor {

namespace {

class LineReader
{
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next non-blank, non-comment line; false at end of input.
    bool next(std::string& line)
    {
        while (std::getline(in_, line)) {
            ++number_;
            const auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#')
                continue;
            return true;
        }
        return false;
    }

    std::size_t number() const { return number_; }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

std::vector<std::uint64_t> parse_integers(const std::string& line, std::size_t line_no)
{
    std::vector<std::uint64_t> out;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\r'))
            ++p;
        if (p == end)
            break;
        std::uint64_t value = 0;
        const auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || (next < end && *next != ' ' && *next != '\t' && *next != '\r'))
            throw ParseError(line_no, "expected a nonnegative integer near '" +
                                          std::string(p, std::min<std::size_t>(end - p, 16)) + "'");
        out.push_back(value);
        p = next;
    }
    return out;
}

} // namespace

Hypergraph read_hypergraph(std::istream& in)
{
    LineReader reader(in);
    std::string line;
    if (!reader.next(line))
        throw ParseError(0, "missing header 'n k m'");
    const std::size_t header_line = reader.number();
    const auto header = parse_integers(line, header_line);
    if (header.size() != 3)
        throw ParseError(header_line, "header must be 'n k m'");
    const std::uint64_t n = header[0];
    const std::uint64_t k = header[1];
    const std::uint64_t m = header[2];
    if (n == 0 || n > 0xffffffffULL)
        throw ParseError(header_line, "vertex count n out of range");
    if (k < 2 || k > n)
        throw ParseError(header_line, "edge size k must satisfy 2 <= k <= n");

    std::vector<Vertex> flat;
    std::set<std::vector<Vertex>> seen;
    std::vector<Vertex> edge(k);
    for (std::uint64_t e = 0; e < m; ++e) {
        if (!reader.next(line))
            throw ParseError(reader.number(), "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        const std::size_t no = reader.number();
        const auto ids = parse_integers(line, no);
        if (ids.size() != k)
            throw ParseError(no, "edge has " + std::to_string(ids.size()) + " vertices, expected " + std::to_string(k));
        for (std::size_t j = 0; j < k; ++j) {
            if (ids[j] < 1 || ids[j] > n)
                throw ParseError(no, "vertex " + std::to_string(ids[j]) + " out of range 1.." + std::to_string(n));
            if (j > 0 && ids[j] <= ids[j - 1])
                throw ParseError(no, "edge vertices are not strictly increasing");
            edge[j] = static_cast<Vertex>(ids[j]);
        }
        if (!seen.insert(edge).second)
            throw ParseError(no, "duplicate edge");
        flat.insert(flat.end(), edge.begin(), edge.end());
    }
    if (reader.next(line))
        throw ParseError(reader.number(), "unexpected content after " + std::to_string(m) + " edges");
    return Hypergraph::from_flat(n, k, std::move(flat));
}

Hypergraph read_hypergraph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_hypergraph(in);
}

std::string write_hypergraph(const Hypergraph& h)
{
    std::string out = std::to_string(h.n()) + ' ' + std::to_string(h.k()) + ' ' + std::to_string(h.edge_count()) + '\n';
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto ed = h.edge(static_cast<EdgeIndex>(e));
        for (std::size_t j = 0; j < ed.size(); ++j) {
            if (j)
                out += ' ';
            out += std::to_string(ed[j]);
        }
        out += '\n';
    }
    return out;
}

Hypergraph load_hypergraph(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path.string() + "' for reading");
    try {
        return read_hypergraph(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.detail(), path.string());
    }
}

void save_hypergraph(const Hypergraph& h, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open '" + path.string() + "' for writing");
    const std::string text = write_hypergraph(h);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw Error("write to '" + path.string() + "' failed");
}

ListAssignment read_list_assignment(std::istream& in)
{
    LineReader reader(in);
    std::string line;
    if (!reader.next(line))
        throw ParseError(0, "missing header 'n r'");
    const auto header = parse_integers(line, reader.number());
    if (header.size() != 2 || header[0] == 0 || header[1] == 0)
        throw ParseError(reader.number(), "header must be 'n r' with positive values");
    std::vector<std::vector<Color>> lists;
    for (std::uint64_t v = 0; v < header[0]; ++v) {
        if (!reader.next(line))
            throw ParseError(reader.number(), "expected " + std::to_string(header[0]) + " lists");
        const auto ids = parse_integers(line, reader.number());
        if (ids.size() != header[1])
            throw ParseError(reader.number(), "list has " + std::to_string(ids.size()) + " colors, expected " +
                                                  std::to_string(header[1]));
        std::vector<Color> l;
        for (auto c : ids) {
            if (c == 0 || c > 0xffffffffULL)
                throw ParseError(reader.number(), "colors must be positive 32-bit integers");
            l.push_back(static_cast<Color>(c));
        }
        lists.push_back(std::move(l));
    }
    try {
        return ListAssignment(header[1], std::move(lists));
    } catch (const InvalidArgument& e) {
        throw ParseError(0, e.what());
    }
}

ListAssignment load_list_assignment(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path.string() + "' for reading");
    try {
        return read_list_assignment(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.detail(), path.string());
    }
}

} // namespace rcolor
