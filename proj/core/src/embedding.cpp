#include "triage/embedding.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "triage/errors.hpp"
#include "triage/text.hpp"

namespace triage {

namespace {

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

bool is_count_header(const std::vector<std::string>& fields) {
    if (fields.size() != 2) return false;
    for (const auto& f : fields)
        for (char c : f)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

EmbeddingTable load_embeddings(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open embedding file: " + path);

    EmbeddingTable table;
    std::string line;
    size_t line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::istringstream ss(line);
        std::vector<std::string> fields;
        std::string field;
        while (ss >> field) fields.push_back(field);

        if (first && is_count_header(fields)) {
            first = false;
            continue;  // "<count> <dimension>" header
        }
        first = false;

        if (fields.size() < 2)
            throw schema_error("embedding file " + path + " line " + std::to_string(line_no) +
                               ": expected token + values");
        std::vector<double> vec;
        vec.reserve(fields.size() - 1);
        for (size_t i = 1; i < fields.size(); ++i) {
            double v;
            if (!parse_double(fields[i], v))
                throw schema_error("embedding file " + path + " line " + std::to_string(line_no) +
                                   ": bad number '" + fields[i] + "'");
            vec.push_back(v);
        }
        if (table.dimension == 0) {
            table.dimension = static_cast<int>(vec.size());
        } else if (static_cast<int>(vec.size()) != table.dimension) {
            throw schema_error("embedding file " + path + " line " + std::to_string(line_no) +
                               ": dimension " + std::to_string(vec.size()) + " != " +
                               std::to_string(table.dimension));
        }
        table.vectors[normalize_text(fields[0])] = std::move(vec);
    }
    if (table.vectors.empty()) throw schema_error("embedding file " + path + ": no vectors");
    return table;
}

void save_embeddings(const EmbeddingTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write embedding file: " + path);
    out << table.vectors.size() << ' ' << table.dimension << '\n';
    // Sorted for reproducible bytes.
    std::map<std::string, const std::vector<double>*> sorted;
    for (const auto& [token, vec] : table.vectors) sorted[token] = &vec;
    out.precision(17);
    for (const auto& [token, vec] : sorted) {
        out << token;
        for (double v : *vec) out << ' ' << v;
        out << '\n';
    }
    if (!out) throw io_error("short write on embedding file: " + path);
}

}  // namespace triage
