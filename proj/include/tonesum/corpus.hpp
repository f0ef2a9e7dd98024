#pragma once

#include <algorithm>
#include <compare>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tonesum/error.hpp"
#include "tonesum/porter.hpp"

namespace tonesum {

struct RawDocument {
    std::string doc_id;
    std::filesystem::path source_path;
    std::string raw_text;
};

struct SentenceRef {
    std::string doc_id;
    int index = 0;
    auto operator<=>(const SentenceRef&) const = default;
};

struct Sentence {
    std::string doc_id;
    int index = 0;                            // 0-based position within the document
    std::string original_text;
    std::vector<std::string> content_tokens;  // stopword-filtered, stemmed
    int word_count = 0;                       // whitespace-delimited words of original_text

    SentenceRef ref() const { return {doc_id, index}; }
};

struct DocumentCluster {
    std::string cluster_id;
    std::vector<std::string> documents;  // doc ids, sorted
    std::vector<Sentence> sentences;     // ordered by (doc_id, index)
};

const std::set<std::string>& default_stopwords();
const std::set<std::string>& default_abbreviations();

struct PreprocessConfig {
    std::set<std::string> stopwords = default_stopwords();
    std::set<std::string> abbreviations = default_abbreviations();
    std::vector<std::string> body_tags = {"TEXT"};  // elements kept in duc_mode
    bool duc_mode = false;
    int min_sentence_tokens = 2;
};

namespace detail {

inline bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
    return out;
}

inline std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : s) {
        if (is_ascii_space(c)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out += ' ';
            pending_space = false;
            out += c;
        }
    }
    return out;
}

// Deletes every <...> span (no nested brackets inside), repeating until no
// span remains so that removals cannot splice new spans together. A '<'
// that never closes is kept as literal text.
inline std::string strip_tag_spans(std::string_view text) {
    std::string cur(text);
    while (true) {
        std::string next;
        next.reserve(cur.size());
        bool removed = false;
        size_t i = 0;
        while (i < cur.size()) {
            if (cur[i] == '<') {
                size_t p = cur.find_first_of("<>", i + 1);
                if (p != std::string::npos && cur[p] == '>') {
                    next += ' ';
                    removed = true;
                    i = p + 1;
                    continue;
                }
            }
            next += cur[i++];
        }
        if (!removed) return next;
        cur = std::move(next);
    }
}

inline size_t find_ci(std::string_view haystack, std::string_view needle, size_t from) {
    if (needle.empty() || from > haystack.size()) return std::string_view::npos;
    for (size_t i = from; i + needle.size() <= haystack.size(); ++i) {
        size_t k = 0;
        while (k < needle.size() && ascii_lower(haystack[i + k]) == ascii_lower(needle[k])) ++k;
        if (k == needle.size()) return i;
    }
    return std::string_view::npos;
}

// Concatenated contents of <tag ...>...</tag> elements, in document order.
// A missing close tag runs to end of input.
inline std::string extract_body_elements(std::string_view text, const std::vector<std::string>& tags) {
    std::string out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t best_open = std::string_view::npos;
        const std::string* best_tag = nullptr;
        for (const auto& tag : tags) {
            size_t from = pos;
            while (true) {
                size_t p = find_ci(text, "<" + tag, from);
                if (p == std::string_view::npos) break;
                size_t after = p + 1 + tag.size();
                if (after < text.size() && (text[after] == '>' || is_ascii_space(text[after]))) {
                    if (p < best_open) {
                        best_open = p;
                        best_tag = &tag;
                    }
                    break;
                }
                from = p + 1;  // prefix of a longer tag name; keep scanning
            }
        }
        if (best_tag == nullptr) break;
        size_t open_end = text.find('>', best_open);
        if (open_end == std::string_view::npos) break;
        size_t content_start = open_end + 1;
        size_t close = find_ci(text, "</" + *best_tag + ">", content_start);
        size_t content_end = (close == std::string_view::npos) ? text.size() : close;
        out.append(text.substr(content_start, content_end - content_start));
        out += ' ';
        pos = (close == std::string_view::npos) ? text.size() : close + 2 + best_tag->size() + 1;
    }
    return out;
}

}  // namespace detail

/// Removes markup and collapses whitespace runs to single spaces. With
/// duc_mode, only the contents of the named body elements are kept first.
/// Lenient: never fails on malformed input.
inline std::string strip_markup(std::string_view raw_text, bool duc_mode,
                                const std::vector<std::string>& body_tags = {"TEXT"}) {
    if (duc_mode) {
        std::string body = detail::extract_body_elements(raw_text, body_tags);
        return detail::collapse_whitespace(detail::strip_tag_spans(body));
    }
    return detail::collapse_whitespace(detail::strip_tag_spans(raw_text));
}

/// Splits text at '.', '!' or '?' followed by whitespace or end of input.
/// A '.' is not a boundary when the token before it is a known abbreviation.
/// Segments are trimmed; text without a terminator comes back whole.
inline std::vector<std::string> segment_sentences(
    std::string_view text, const std::set<std::string>& abbreviations = default_abbreviations()) {
    std::vector<std::string> segments;
    size_t start = 0;
    auto flush = [&](size_t end) {
        size_t b = start;
        size_t e = end;
        while (b < e && detail::is_ascii_space(text[b])) ++b;
        while (e > b && detail::is_ascii_space(text[e - 1])) --e;
        if (e > b) segments.emplace_back(text.substr(b, e - b));
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '.' && c != '!' && c != '?') continue;
        if (i + 1 < text.size() && !detail::is_ascii_space(text[i + 1])) continue;
        if (c == '.') {
            size_t ts = i;
            while (ts > start && !detail::is_ascii_space(text[ts - 1])) --ts;
            std::string token = detail::to_lower(text.substr(ts, i - ts));
            if (abbreviations.count(token)) continue;
        }
        flush(i + 1);
        start = i + 1;
    }
    flush(text.size());
    return segments;
}

/// Lowercased maximal runs of ASCII letters/digits; everything else separates.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        char lc = detail::ascii_lower(c);
        if ((lc >= 'a' && lc <= 'z') || (lc >= '0' && lc <= '9')) {
            cur += lc;
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

inline std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                                 const std::set<std::string>& stopwords) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const auto& t : tokens)
        if (!stopwords.count(t)) kept.push_back(t);
    return kept;
}

inline int count_words(std::string_view text) {
    int n = 0;
    bool in_word = false;
    for (char c : text) {
        bool space = detail::is_ascii_space(c);
        if (!space && !in_word) ++n;
        in_word = !space;
    }
    return n;
}

/// Full preprocessing: strip markup, segment, tokenize, drop stopwords,
/// stem. Sentences with fewer than min_sentence_tokens content tokens are
/// dropped (their original positions stay reflected in the indices).
inline DocumentCluster preprocess_cluster(std::string cluster_id, std::vector<RawDocument> docs,
                                          const PreprocessConfig& config) {
    if (docs.empty()) throw DataError("cluster '" + cluster_id + "': no documents");
    std::sort(docs.begin(), docs.end(),
              [](const RawDocument& a, const RawDocument& b) { return a.doc_id < b.doc_id; });
    DocumentCluster cluster;
    cluster.cluster_id = std::move(cluster_id);
    for (size_t d = 0; d < docs.size(); ++d) {
        const RawDocument& doc = docs[d];
        if (d > 0 && docs[d - 1].doc_id == doc.doc_id)
            throw DataError("cluster '" + cluster.cluster_id + "': duplicate document id '" +
                            doc.doc_id + "'");
        if (detail::collapse_whitespace(doc.raw_text).empty())
            throw DataError("document '" + doc.doc_id + "': empty document");
        cluster.documents.push_back(doc.doc_id);
        std::string text = strip_markup(doc.raw_text, config.duc_mode, config.body_tags);
        std::vector<std::string> segments = segment_sentences(text, config.abbreviations);
        for (size_t i = 0; i < segments.size(); ++i) {
            Sentence s;
            s.doc_id = doc.doc_id;
            s.index = static_cast<int>(i);
            s.original_text = segments[i];
            s.word_count = count_words(segments[i]);
            for (const auto& tok : remove_stopwords(tokenize(segments[i]), config.stopwords))
                s.content_tokens.push_back(porter_stem(tok));
            if (static_cast<int>(s.content_tokens.size()) < config.min_sentence_tokens) continue;
            cluster.sentences.push_back(std::move(s));
        }
    }
    if (cluster.sentences.empty())
        throw DataError("cluster '" + cluster.cluster_id +
                        "': empty cluster (no sentences survived preprocessing)");
    return cluster;
}

/// One lowercase token per line; blank lines and '#' comments ignored.
inline std::set<std::string> load_wordlist(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open word list: " + path.string());
    std::set<std::string> words;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos || line[b] == '#') continue;
        size_t e = line.find_last_not_of(" \t");
        std::string word = line.substr(b, e - b + 1);
        if (word.find_first_of(" \t") != std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": word list entries must not contain whitespace");
        words.insert(detail::to_lower(word));
    }
    return words;
}

struct ClusterFiles {
    std::string cluster_id;
    std::vector<RawDocument> docs;
};

/// One document file. doc_id is the filename stem.
inline RawDocument load_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open document: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    RawDocument doc{path.stem().string(), path, buf.str()};
    if (detail::collapse_whitespace(doc.raw_text).empty())
        throw DataError("document '" + doc.doc_id + "' (" + path.string() + "): empty document");
    return doc;
}

/// Corpus layout: one subdirectory per cluster, one file per document.
/// Clusters come back sorted by id, documents sorted by filename.
inline std::vector<ClusterFiles> load_corpus_dir(const std::filesystem::path& corpus_dir) {
    if (!std::filesystem::is_directory(corpus_dir))
        throw ConfigError("corpus directory does not exist: " + corpus_dir.string());
    std::vector<ClusterFiles> clusters;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
        if (!entry.is_directory()) continue;
        ClusterFiles cf;
        cf.cluster_id = entry.path().filename().string();
        std::vector<std::filesystem::path> files;
        for (const auto& f : std::filesystem::directory_iterator(entry.path()))
            if (f.is_regular_file()) files.push_back(f.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) cf.docs.push_back(load_document(f));
        if (cf.docs.empty())
            throw DataError("cluster '" + cf.cluster_id + "': no document files");
        clusters.push_back(std::move(cf));
    }
    std::sort(clusters.begin(), clusters.end(),
              [](const ClusterFiles& a, const ClusterFiles& b) { return a.cluster_id < b.cluster_id; });
    if (clusters.empty())
        throw DataError("no clusters found under " + corpus_dir.string());
    return clusters;
}

inline const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = {
        "a", "about", "above", "after", "again", "against", "all", "also", "am", "an", "and",
        "any", "are", "as", "at", "be", "because", "been", "before", "being", "below", "between",
        "both", "but", "by", "came", "can", "cannot", "come", "could", "did", "do", "does",
        "doing", "down", "during", "each", "few", "for", "from", "further", "get", "got", "had",
        "has", "have", "having", "he", "her", "here", "hers", "herself", "him", "himself", "his",
        "how", "i", "if", "in", "into", "is", "it", "its", "itself", "just", "like", "made",
        "make", "many", "me", "might", "more", "most", "much", "must", "my", "myself", "never",
        "no", "nor", "not", "now", "of", "off", "on", "once", "only", "or", "other", "our",
        "ours", "ourselves", "out", "over", "own", "said", "same", "see", "she", "should",
        "since", "so", "some", "such", "than", "that", "the", "their", "theirs", "them",
        "themselves", "then", "there", "these", "they", "this", "those", "through", "to", "too",
        "under", "until", "up", "upon", "us", "very", "was", "way", "we", "well", "were", "what",
        "when", "where", "which", "while", "who", "whom", "why", "will", "with", "would", "you",
        "your", "yours", "yourself", "yourselves",
    };
    return words;
}

inline const std::set<std::string>& default_abbreviations() {
    static const std::set<std::string> words = [] {
        std::set<std::string> s = {
            "mr", "mrs", "ms", "dr", "st", "vs", "etc", "inc", "co", "corp", "ltd", "jr", "sr",
            "prof", "rev", "gen", "sen", "rep", "gov", "capt", "sgt", "col", "lt", "maj", "adm",
            "fig", "no", "dept", "est", "min", "max", "avg", "approx", "u.s", "u.k", "u.n",
            "e.g", "i.e", "a.m", "p.m", "ph.d", "b.c", "a.d", "jan", "feb", "mar", "apr", "jun",
            "jul", "aug", "sep", "sept", "oct", "nov", "dec", "mon", "tue", "tues", "wed", "thu",
            "thur", "thurs", "fri", "sat", "sun",
        };
        for (char c = 'a'; c <= 'z'; ++c) s.insert(std::string(1, c));  // initials
        return s;
    }();
    return words;
}

}  // namespace tonesum
