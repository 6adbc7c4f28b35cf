#include "triage/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include <json.hpp>

#include "triage/cluster.hpp"
#include "triage/errors.hpp"
#include "triage/rake.hpp"
#include "triage/text.hpp"

namespace triage {

using nlohmann::json;

namespace {

const char* family_name(FeatureDist::Family family) {
    switch (family) {
        case FeatureDist::Family::PointMass: return "point_mass";
        case FeatureDist::Family::Normal: return "normal";
        case FeatureDist::Family::LogNormal: return "lognormal";
    }
    return "point_mass";
}

FeatureDist::Family family_from_string(const std::string& s) {
    if (s == "point_mass") return FeatureDist::Family::PointMass;
    if (s == "normal") return FeatureDist::Family::Normal;
    if (s == "lognormal") return FeatureDist::Family::LogNormal;
    throw schema_error("unknown distribution family '" + s + "'");
}

double sample(const FeatureDist& dist, std::mt19937_64& rng) {
    switch (dist.family) {
        case FeatureDist::Family::PointMass: return dist.p1;
        case FeatureDist::Family::Normal: {
            std::normal_distribution<double> d(dist.p1, dist.p2);
            return d(rng);
        }
        case FeatureDist::Family::LogNormal: {
            std::lognormal_distribution<double> d(dist.p1, dist.p2);
            return d(rng);
        }
    }
    return dist.p1;
}

void validate_dist(const std::string& feature, const FeatureDist& dist) {
    if (dist.family != FeatureDist::Family::PointMass && dist.p2 <= 0.0)
        throw data_error("synth spec: feature '" + feature + "' needs a positive scale");
}

FeatureDist pm(double v) { return {FeatureDist::Family::PointMass, v, 0.0}; }
FeatureDist normal(double mean, double sd) { return {FeatureDist::Family::Normal, mean, sd}; }
FeatureDist lognormal(double mu, double sigma) {
    return {FeatureDist::Family::LogNormal, mu, sigma};
}

// Noise defaults for features the spec leaves out: both classes share them.
const std::map<std::string, FeatureDist>& noise_defaults() {
    static const std::map<std::string, FeatureDist> defaults = {
        {"Keyword Match", normal(8, 2)},
        {"Cluster Distance", pm(0)},  // same-topic texts for both classes
        {"Title Scope", normal(12, 3)},
        {"Conference Scope", normal(4, 1)},
        {"Journal Scope", normal(4, 1)},
        {"ADPF", normal(2, 1)},
        {"Auth-P-h", lognormal(2.2, 0.5)},
        {"Auth-avg-h", lognormal(2.2, 0.5)},
        {"Auth-max-h", lognormal(2.2, 0.5)},
        {"Auth-P-cit", lognormal(5.0, 0.8)},
        {"Auth-avg-cit", lognormal(5.0, 0.8)},
        {"Auth-max-cit", lognormal(5.0, 0.8)},
        {"Affl-P-rs", normal(45, 12)},
        {"Affl-avg-rs", normal(45, 12)},
        {"Affl-P-doc", lognormal(7.0, 0.9)},
        {"Affl-avg-doc", lognormal(7.0, 0.9)},
        {"Affl-max-doc", lognormal(7.0, 0.9)},
        {"Affl-max-rs", normal(45, 12)},
        {"W-Imp-cit-avg", lognormal(4.5, 0.6)},
        {"Cit-avg", lognormal(3.2, 0.5)},
        {"Temp-avg", normal(6, 1.5)},
        {"Temp-min", normal(2, 1)},
        {"Temp-5", normal(4, 1.5)},
        {"Venue-havg-j", normal(80, 20)},
        {"Venue-sjravg-j", lognormal(0.5, 0.5)},
        {"Venue-avg-m", normal(4, 1)},
        {"Uncited-ref", normal(2, 1)},
        {"Math-eq", lognormal(2.0, 0.6)},
        {"Table-c", normal(4, 1.5)},
        {"Fig-c", normal(6, 2)}};
    return defaults;
}

struct Targets {
    std::map<std::string, double> value;
    double operator[](const std::string& name) const { return value.at(name); }
};

Targets sample_targets(const SynthSpec& spec, bool fwd, std::mt19937_64& rng) {
    Targets t;
    for (const auto& name : feature_names()) {
        auto it = spec.features.find(name);
        const FeatureDist& dist = it != spec.features.end()
                                      ? (fwd ? it->second.first : it->second.second)
                                      : noise_defaults().at(name);
        t.value[name] = sample(dist, rng);
    }
    return t;
}

long long round_at_least(double v, long long lo) {
    return std::max(lo, static_cast<long long>(std::llround(v)));
}

long long clamp_round(double v, long long lo, long long hi) {
    return std::clamp(static_cast<long long>(std::llround(v)), lo, hi);
}

double list_mean(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double sum = 0.0;
    for (double x : xs) sum += x;  // left-to-right, like the feature code
    return sum / static_cast<double>(xs.size());
}

// Entries FWD papers donated to the dictionary, all with induced value 1,
// available for NFWD papers to hit positive scope targets.
struct DonorPools {
    std::vector<std::string> keywords, titles, conf_venues, journal_venues, authors;
    size_t kw_at = 0, title_at = 0, conf_at = 0, journal_at = 0, author_at = 0;

    static std::vector<std::string> take(std::vector<std::string>& pool, size_t& cursor,
                                         long long want) {
        std::vector<std::string> out;
        const long long n = std::min<long long>(want, static_cast<long long>(pool.size()));
        for (long long i = 0; i < n; ++i) {
            out.push_back(pool[cursor]);
            cursor = (cursor + 1) % pool.size();
        }
        return out;
    }
};

struct Generator {
    const SynthSpec& spec;
    std::mt19937_64 rng;
    DonorPools pools;
    std::vector<std::string> topic_a, topic_b, topic_z;
    bool cluster_planted = false;

    explicit Generator(const SynthSpec& s) : spec(s), rng(s.seed) {}

    std::string topic_phrase(const std::vector<std::string>& pool) {
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        return pool[pick(rng)] + " " + pool[pick(rng)];
    }

    void fill_texts(PaperRecord& rec, bool fwd, int index) {
        const std::vector<std::string>& pool =
            fwd ? (index % 2 == 0 ? topic_a : topic_b) : (cluster_planted ? topic_z : topic_a);
        rec.title = normalize_text(topic_phrase(pool));
        std::string abstract;
        for (int i = 0; i < 5; ++i) {
            if (i > 0) abstract += " of the ";
            abstract += topic_phrase(pool);
        }
        rec.abstract = abstract + ".";
        rec.sections.push_back({SectionKind::INTRO, "in " + topic_phrase(pool) + "."});
        rec.sections.push_back({SectionKind::BODY, "body text."});
        rec.sections.push_back({SectionKind::CONCLUSION, "so " + topic_phrase(pool) + "."});
    }

    void fill_authors(PaperRecord& rec, FeatureVector& truth, const Targets& t, bool fwd,
                      const std::string& tag) {
        std::vector<std::string> names;
        long long adpf_achieved = 0;
        if (fwd) {
            const long long m = clamp_round(t["ADPF"], 1, 12);
            for (long long i = 0; i < m; ++i)
                names.push_back("author-" + tag + "-" + std::to_string(i));
            adpf_achieved = m;  // each fresh author publishes exactly this paper
        } else {
            const long long borrow = clamp_round(t["ADPF"], 0, 12);
            names = DonorPools::take(pools.authors, pools.author_at, borrow);
            adpf_achieved = static_cast<long long>(names.size());
            names.push_back("author-" + tag + "-x0");
            names.push_back("author-" + tag + "-x1");
        }

        const long long m = static_cast<long long>(names.size());
        std::uniform_int_distribution<long long> jitter(0, 2);

        const long long h = round_at_least(t["Auth-avg-h"], 0);
        const long long dh = m >= 2 ? std::min(h, jitter(rng)) : 0;
        const long long cit = round_at_least(t["Auth-avg-cit"], 0);
        const long long dc = m >= 2 ? std::min(cit, 10 * jitter(rng)) : 0;
        const double rs = std::clamp(t["Affl-avg-rs"], 0.0, 100.0);
        const double er = m >= 2 ? std::min({rs, 100.0 - rs, 0.5}) : 0.0;
        const long long doc = round_at_least(t["Affl-avg-doc"], 0);
        const long long dd = m >= 2 ? std::min(doc, 25 * jitter(rng)) : 0;

        std::vector<double> hs, cits, rss, docs;
        for (long long i = 0; i < m; ++i) {
            const long long sign = i == 0 ? -1 : (i == 1 ? 1 : 0);
            AuthorInfo author;
            author.name = names[static_cast<size_t>(i)];
            author.h_index = h + sign * dh;
            author.total_citations = cit + sign * dc;
            author.affiliation.name = "institute " + tag;
            author.affiliation.research_score = rs + static_cast<double>(sign) * er;
            author.affiliation.doc_count = doc + sign * dd;
            hs.push_back(static_cast<double>(author.h_index));
            cits.push_back(static_cast<double>(author.total_citations));
            rss.push_back(author.affiliation.research_score);
            docs.push_back(static_cast<double>(author.affiliation.doc_count));
            rec.authors.push_back(std::move(author));
        }

        auto set = [&](const std::string& name, double v) { truth.values[feature_index(name)] = v; };
        set("ADPF", static_cast<double>(adpf_achieved));
        set("Auth-P-h", hs.front());
        set("Auth-avg-h", list_mean(hs));
        set("Auth-max-h", *std::max_element(hs.begin(), hs.end()));
        set("Auth-P-cit", cits.front());
        set("Auth-avg-cit", list_mean(cits));
        set("Auth-max-cit", *std::max_element(cits.begin(), cits.end()));
        set("Affl-P-rs", rss.front());
        set("Affl-avg-rs", list_mean(rss));
        set("Affl-max-rs", *std::max_element(rss.begin(), rss.end()));
        set("Affl-P-doc", docs.front());
        set("Affl-avg-doc", list_mean(docs));
        set("Affl-max-doc", *std::max_element(docs.begin(), docs.end()));

        if (fwd)
            for (const auto& name : names) pools.authors.push_back(name);
    }

    void fill_keywords(PaperRecord& rec, FeatureVector& truth, const Targets& t, bool fwd,
                       const std::string& tag) {
        double achieved = 0;
        if (fwd) {
            const long long k = clamp_round(t["Keyword Match"], 0, 60);
            for (long long i = 0; i < k; ++i) {
                rec.keywords.push_back("kw-" + tag + "-" + std::to_string(i));
                pools.keywords.push_back(rec.keywords.back());
            }
            achieved = static_cast<double>(k);  // each keyword self-listed once: f = 1
        } else {
            const long long k = clamp_round(t["Keyword Match"], 0, 60);
            rec.keywords = DonorPools::take(pools.keywords, pools.kw_at, k);
            achieved = static_cast<double>(rec.keywords.size());  // all hits, ratio 1
        }
        truth.values[feature_index("Keyword Match")] = achieved;
    }

    void fill_references(PaperRecord& rec, FeatureVector& truth, const Targets& t, bool fwd,
                         const std::string& tag) {
        auto set = [&](const std::string& name, double v) { truth.values[feature_index(name)] = v; };
        long long title_mass_own = 0;  // CE donated to the title dictionary by this paper

        // Citation block: identical counts keep the MAD filter trivially empty,
        // so all of these are impact references.
        const long long count = round_at_least(t["Cit-avg"], 0);
        const long long ce =
            count > 0 ? clamp_round(t["W-Imp-cit-avg"] / static_cast<double>(count), 1, 1000) : 1;
        const long long n_cit = clamp_round(std::max(2.0, t["Temp-5"]), 2, 24);

        const long long td_min = clamp_round(t["Temp-min"], -80, 115);
        long long td_rest = td_min;
        if (n_cit > 1)
            td_rest = clamp_round((t["Temp-avg"] * static_cast<double>(n_cit) -
                                   static_cast<double>(td_min)) /
                                      static_cast<double>(n_cit - 1),
                                  td_min, 115);
        std::vector<double> tds;
        std::vector<double> weighted;
        long long temp5 = 0;
        for (long long i = 0; i < n_cit; ++i) {
            const long long td = i == 0 ? td_min : td_rest;
            Reference ref;
            ref.title = "rt-" + tag + "-c" + std::to_string(i);
            ref.year = spec.paper_year - static_cast<int>(td);
            ref.citation_count = count;
            ref.in_text_count = ce;
            rec.references.push_back(std::move(ref));
            tds.push_back(static_cast<double>(td));
            weighted.push_back(static_cast<double>(count) * static_cast<double>(ce));
            if (td <= 5) ++temp5;
            title_mass_own += ce;
        }
        set("Cit-avg", static_cast<double>(count));
        set("W-Imp-cit-avg", list_mean(weighted));
        set("Temp-avg", list_mean(tds));
        set("Temp-min", static_cast<double>(td_min));
        set("Temp-5", static_cast<double>(temp5));

        const long long uncited = clamp_round(t["Uncited-ref"], 0, 30);
        for (long long i = 0; i < uncited; ++i) {
            Reference ref;
            ref.title = "rt-" + tag + "-u" + std::to_string(i);
            ref.in_text_count = 0;
            rec.references.push_back(std::move(ref));
        }
        set("Uncited-ref", static_cast<double>(uncited));

        // Journal references: fresh ones carry the venue scores; for NFWD the
        // scope mass comes from borrowed venue names instead.
        const long long havg = round_at_least(t["Venue-havg-j"], 0);
        const double sjr = std::max(0.0, t["Venue-sjravg-j"]);
        const bool journal_scores = t["Venue-havg-j"] > 0.5 || sjr > 0.01;
        const long long scope_j = clamp_round(t["Journal Scope"], 0, 40);

        std::vector<double> h_list, sjr_list;
        auto journal_ref = [&](const std::string& venue, const std::string& title) {
            Reference ref;
            ref.title = title;
            ref.venue = {venue, VenueKind::JOURNAL, havg, sjr, CoreGrade::UNRANKED};
            ref.in_text_count = 1;
            rec.references.push_back(ref);
            h_list.push_back(static_cast<double>(havg));
            sjr_list.push_back(sjr);
        };

        long long journal_refs = 0;
        if (fwd) {
            for (long long i = 0; i < scope_j; ++i) {
                const std::string venue = "jv-" + tag + "-" + std::to_string(i);
                journal_ref(venue, "rt-" + tag + "-j" + std::to_string(i));
                pools.journal_venues.push_back(venue);
                ++title_mass_own;
            }
            journal_refs = scope_j;
            set("Journal Scope", static_cast<double>(scope_j));
        } else {
            const long long fresh = journal_scores ? 2 : 0;
            for (long long i = 0; i < fresh; ++i)
                journal_ref("jv-" + tag + "-f" + std::to_string(i),
                            "rt-" + tag + "-jf" + std::to_string(i));
            const auto borrowed =
                DonorPools::take(pools.journal_venues, pools.journal_at, scope_j);
            for (size_t i = 0; i < borrowed.size(); ++i)
                journal_ref(borrowed[i], "rt-" + tag + "-jb" + std::to_string(i));
            journal_refs = fresh + static_cast<long long>(borrowed.size());
            set("Journal Scope", static_cast<double>(borrowed.size()));
        }
        (void)journal_refs;
        set("Venue-havg-j", list_mean(h_list));
        set("Venue-sjravg-j", list_mean(sjr_list));

        // Conference references, same split. Borrowed venues stay UNRANKED so
        // only the fresh ones shape the CORE average.
        const double grade_target = t["Venue-avg-m"];
        CoreGrade grade = CoreGrade::UNRANKED;
        double grade_value = 0.0;
        if (grade_target > 0.01) {
            const std::pair<double, CoreGrade> ladder[] = {{2.0, CoreGrade::D},
                                                           {3.0, CoreGrade::B},
                                                           {4.0, CoreGrade::A},
                                                           {6.0, CoreGrade::A_STAR}};
            double best = 1e9;
            for (const auto& [value, g] : ladder) {
                if (std::abs(value - grade_target) < best) {
                    best = std::abs(value - grade_target);
                    grade = g;
                    grade_value = value;
                }
            }
        }
        const long long scope_c = clamp_round(t["Conference Scope"], 0, 40);

        std::vector<double> grade_list;
        auto conf_ref = [&](const std::string& venue, const std::string& title, CoreGrade g) {
            Reference ref;
            ref.title = title;
            ref.venue = {venue, VenueKind::CONFERENCE, std::nullopt, std::nullopt, g};
            ref.in_text_count = 1;
            rec.references.push_back(ref);
            if (g != CoreGrade::UNRANKED) grade_list.push_back(grade_value);
        };
        if (fwd) {
            for (long long i = 0; i < scope_c; ++i) {
                const std::string venue = "cv-" + tag + "-" + std::to_string(i);
                conf_ref(venue, "rt-" + tag + "-v" + std::to_string(i), grade);
                pools.conf_venues.push_back(venue);
                ++title_mass_own;
            }
            set("Conference Scope", static_cast<double>(scope_c));
        } else {
            const long long fresh = grade != CoreGrade::UNRANKED ? 2 : 0;
            for (long long i = 0; i < fresh; ++i)
                conf_ref("cv-" + tag + "-f" + std::to_string(i),
                         "rt-" + tag + "-vf" + std::to_string(i), grade);
            const auto borrowed = DonorPools::take(pools.conf_venues, pools.conf_at, scope_c);
            for (size_t i = 0; i < borrowed.size(); ++i)
                conf_ref(borrowed[i], "rt-" + tag + "-vb" + std::to_string(i),
                         CoreGrade::UNRANKED);
            set("Conference Scope", static_cast<double>(borrowed.size()));
        }
        set("Venue-avg-m", list_mean(grade_list));

        // Title scope: pad with plain cited references (FWD) or borrow donated
        // unit-value titles (NFWD).
        if (fwd) {
            const long long want = round_at_least(t["Title Scope"], 0);
            const long long pad = std::max<long long>(0, want - title_mass_own);
            for (long long i = 0; i < pad; ++i) {
                Reference ref;
                ref.title = "rt-" + tag + "-p" + std::to_string(i);
                ref.in_text_count = 1;
                rec.references.push_back(std::move(ref));
            }
            set("Title Scope", static_cast<double>(title_mass_own + pad));
        } else {
            const long long want = clamp_round(t["Title Scope"], 0, 200);
            const auto borrowed = DonorPools::take(pools.titles, pools.title_at, want);
            for (size_t i = 0; i < borrowed.size(); ++i) {
                Reference ref;
                ref.title = borrowed[i];
                ref.in_text_count = 1;
                rec.references.push_back(std::move(ref));
            }
            set("Title Scope", static_cast<double>(borrowed.size()));
        }

        // Donate this paper's unit-value titles (every CE=1 reference).
        if (fwd)
            for (const auto& ref : rec.references)
                if (ref.in_text_count == 1) pools.titles.push_back(ref.title);
    }

    std::pair<PaperRecord, FeatureVector> make_paper(bool fwd, int index) {
        const std::string tag = (fwd ? "f" : "n") + std::to_string(index);
        const Targets t = sample_targets(spec, fwd, rng);

        PaperRecord rec;
        rec.id = (fwd ? "fwd-" : "nfwd-") + std::to_string(index);
        rec.journal_id = spec.journal_id;
        rec.label = fwd ? Label::FWD : Label::NFWD;
        rec.year = spec.paper_year;
        fill_texts(rec, fwd, index);

        FeatureVector truth;
        truth.paper_id = rec.id;
        truth.label = rec.label;

        fill_authors(rec, truth, t, fwd, tag);
        fill_keywords(rec, truth, t, fwd, tag);
        fill_references(rec, truth, t, fwd, tag);

        rec.counts.math_eq = round_at_least(t["Math-eq"], 0);
        rec.counts.tables = round_at_least(t["Table-c"], 0);
        rec.counts.figures = round_at_least(t["Fig-c"], 0);
        truth.values[feature_index("Math-eq")] = static_cast<double>(rec.counts.math_eq);
        truth.values[feature_index("Table-c")] = static_cast<double>(rec.counts.tables);
        truth.values[feature_index("Fig-c")] = static_cast<double>(rec.counts.figures);

        normalize_record(rec);
        return {std::move(rec), std::move(truth)};
    }

    EmbeddingTable make_embeddings() {
        EmbeddingTable table;
        table.dimension = spec.embedding_dim;
        std::uniform_real_distribution<double> noise(-0.5, 0.5);
        auto region = [&](const std::string& prefix, int axis, double offset,
                          std::vector<std::string>& pool) {
            for (int i = 0; i < 20; ++i) {
                std::vector<double> vec(static_cast<size_t>(spec.embedding_dim));
                for (auto& v : vec) v = noise(rng);
                vec[static_cast<size_t>(axis)] += offset;
                const std::string token = prefix + std::to_string(i);
                table.vectors[token] = std::move(vec);
                pool.push_back(token);
            }
        };
        region("t-a-", 0, 5.0, topic_a);
        region("t-b-", 1, 5.0, topic_b);
        region("t-z-", 2, 40.0, topic_z);
        return table;
    }
};

}  // namespace

SynthSpec default_synth_spec() {
    SynthSpec spec;
    spec.features = {
        {"Keyword Match", {normal(30, 2), normal(5, 1)}},
        {"Cluster Distance", {pm(0), pm(1)}},  // differing targets plant topic separation
        {"Title Scope", {normal(60, 5), normal(8, 2)}},
        {"Conference Scope", {normal(12, 1), normal(2, 0.5)}},
        {"Journal Scope", {normal(10, 1), normal(1, 0.5)}},
        {"ADPF", {normal(7, 1), normal(1, 0.5)}},
    };
    return spec;
}

SynthResult synth_corpus(const SynthSpec& spec) {
    if (spec.n_per_class < 10)
        throw data_error("synth spec: n_per_class must be at least 10, got " +
                         std::to_string(spec.n_per_class));
    if (spec.embedding_dim < 3)
        throw data_error("synth spec: embedding_dim must be at least 3");
    if (spec.paper_year < 1900 || spec.paper_year > 2100)
        throw data_error("synth spec: paper_year out of range");
    for (const auto& [name, dists] : spec.features) {
        feature_index(name);  // rejects unknown names
        validate_dist(name, dists.first);
        validate_dist(name, dists.second);
    }

    Generator gen(spec);
    auto cluster_spec = spec.features.find("Cluster Distance");
    gen.cluster_planted =
        cluster_spec != spec.features.end() && !(cluster_spec->second.first == cluster_spec->second.second);

    SynthResult result;
    result.embeddings = gen.make_embeddings();
    result.corpus.journal_id = spec.journal_id;

    for (int i = 0; i < spec.n_per_class; ++i) {
        auto [rec, truth] = gen.make_paper(true, i);
        result.corpus.records.push_back(std::move(rec));
        result.truth.push_back(std::move(truth));
    }
    for (int i = 0; i < spec.n_per_class; ++i) {
        auto [rec, truth] = gen.make_paper(false, i);
        result.corpus.records.push_back(std::move(rec));
        result.truth.push_back(std::move(truth));
    }

    // Cluster distances are not invertible: evaluate them with the same
    // pipeline the consumer will run (default K range, the spec's seed).
    Corpus accepted;
    accepted.journal_id = spec.journal_id;
    for (const auto& rec : result.corpus.records)
        if (rec.label == Label::FWD) accepted.records.push_back(rec);
    const ClusterModel model = fit_cluster_model(accepted, result.embeddings, default_stopwords(),
                                                 kDefaultKMin, kDefaultKMax, spec.seed);
    const int cd_index = feature_index("Cluster Distance");
    for (size_t i = 0; i < result.corpus.records.size(); ++i)
        result.truth[i].values[static_cast<size_t>(cd_index)] =
            cluster_distance(result.corpus.records[i], model, result.embeddings,
                             default_stopwords());
    return result;
}

SynthSpec load_synth_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open synth spec: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw schema_error("synth spec " + path + ": " + e.what());
    }
    if (!j.contains("schema_version") || j["schema_version"] != 1)
        throw schema_error("synth spec " + path + ": schema_version 1 required");

    SynthSpec spec;
    try {
        spec.journal_id = j.value("journal_id", spec.journal_id);
        spec.n_per_class = j.at("n_per_class").get<int>();
        spec.seed = j.value("seed", spec.seed);
        spec.embedding_dim = j.value("embedding_dim", spec.embedding_dim);
        spec.paper_year = j.value("paper_year", spec.paper_year);
        if (j.contains("features")) {
            for (const auto& [name, fj] : j.at("features").items()) {
                auto parse = [&](const json& dj) {
                    FeatureDist dist;
                    dist.family = family_from_string(dj.at("family").get<std::string>());
                    dist.p1 = dj.at("p1").get<double>();
                    dist.p2 = dj.value("p2", 0.0);
                    return dist;
                };
                spec.features[name] = {parse(fj.at("fwd")), parse(fj.at("nfwd"))};
            }
        }
    } catch (const json::exception& e) {
        throw schema_error("synth spec " + path + ": " + e.what());
    }
    return spec;
}

void save_synth_spec(const SynthSpec& spec, const std::string& path) {
    json j;
    j["schema_version"] = 1;
    j["journal_id"] = spec.journal_id;
    j["n_per_class"] = spec.n_per_class;
    j["seed"] = spec.seed;
    j["embedding_dim"] = spec.embedding_dim;
    j["paper_year"] = spec.paper_year;
    json features = json::object();
    for (const auto& [name, dists] : spec.features) {
        auto dump = [](const FeatureDist& d) {
            return json{{"family", family_name(d.family)}, {"p1", d.p1}, {"p2", d.p2}};
        };
        features[name] = {{"fwd", dump(dists.first)}, {"nfwd", dump(dists.second)}};
    }
    j["features"] = std::move(features);

    std::ofstream out(path);
    if (!out) throw io_error("cannot write synth spec: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw io_error("short write on synth spec: " + path);
}

}  // namespace triage
