#include "triage/dictionary.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "triage/errors.hpp"

namespace triage {

using nlohmann::json;

JournalDictionary build_dictionary(const Corpus& accepted) {
    if (accepted.records.empty()) throw data_error("cannot build a dictionary from an empty corpus");

    JournalDictionary dict;
    dict.journal_id = accepted.journal_id;
    dict.source_size = static_cast<long long>(accepted.records.size());

    for (const auto& rec : accepted.records) {
        // One count per paper per listed keyword; keyword sections are sets.
        std::set<std::string> kws(rec.keywords.begin(), rec.keywords.end());
        for (const auto& kw : kws)
            if (!kw.empty()) dict.keyword_freq[kw] += 1;

        std::set<std::string> names;
        for (const auto& author : rec.authors) names.insert(author.name);
        for (const auto& name : names)
            if (!name.empty()) dict.author_pub_freq[name] += 1;

        for (const auto& ref : rec.references) {
            if (ref.in_text_count <= 0) continue;  // uncited entries carry no CE mass
            const double ce = static_cast<double>(ref.in_text_count);
            dict.title_value[ref.title] += ce;
            if (ref.venue.name.empty()) continue;
            switch (ref.venue.kind) {
                case VenueKind::CONFERENCE: dict.conference_value[ref.venue.name] += ce; break;
                case VenueKind::JOURNAL: dict.journal_value[ref.venue.name] += ce; break;
                case VenueKind::OTHER: break;
            }
        }
    }
    return dict;
}

void save_dictionary(const JournalDictionary& dict, const std::string& path) {
    json j;
    j["schema_version"] = 1;
    j["journal_id"] = dict.journal_id;
    j["keyword_freq"] = dict.keyword_freq;
    j["title_value"] = dict.title_value;
    j["conference_value"] = dict.conference_value;
    j["journal_value"] = dict.journal_value;
    j["author_pub_freq"] = dict.author_pub_freq;
    j["source_size"] = dict.source_size;

    std::ofstream out(path);
    if (!out) throw io_error("cannot write dictionary file: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw io_error("short write on dictionary file: " + path);
}

JournalDictionary load_dictionary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open dictionary file: " + path);

    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw schema_error("dictionary file " + path + ": " + e.what());
    }
    if (!j.contains("schema_version") || j["schema_version"] != 1)
        throw schema_error("dictionary file " + path + ": schema_version 1 required");

    JournalDictionary dict;
    try {
        dict.journal_id = j.at("journal_id").get<std::string>();
        dict.keyword_freq = j.at("keyword_freq").get<std::map<std::string, long long>>();
        dict.title_value = j.at("title_value").get<std::map<std::string, double>>();
        dict.conference_value = j.at("conference_value").get<std::map<std::string, double>>();
        dict.journal_value = j.at("journal_value").get<std::map<std::string, double>>();
        dict.author_pub_freq = j.at("author_pub_freq").get<std::map<std::string, long long>>();
        dict.source_size = j.at("source_size").get<long long>();
    } catch (const json::exception& e) {
        throw schema_error("dictionary file " + path + ": " + e.what());
    }
    return dict;
}

}  // namespace triage
