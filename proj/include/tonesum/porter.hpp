#pragma once

#include <string>
#include <string_view>

namespace tonesum {

namespace detail {

// Suffix-stripping stemmer for lowercase English words, following the
// standard reference encoding of the Porter algorithm (including its two
// step-2 amendments, bli->ble and logi->log, which the published test
// vocabulary reflects). Operates in place on an a-z buffer.
class PorterStemmer {
public:
    explicit PorterStemmer(std::string& word) : w_(word), j_(0) {}

    void run() {
        if (w_.size() <= 2) return;
        step1a();
        step1b();
        step1c();
        step2();
        step3();
        step4();
        step5();
    }

private:
    std::string& w_;
    int j_;  // last index of the stem the current rule condition applies to

    int last() const { return static_cast<int>(w_.size()) - 1; }

    bool is_consonant(int i) const {
        switch (w_[static_cast<size_t>(i)]) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return i == 0 ? true : !is_consonant(i - 1);
            default:
                return true;
        }
    }

    // Number of vowel-consonant sequences in w[0..j], the measure m.
    int measure() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j_) return n;
            if (!is_consonant(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j_) return n;
                if (is_consonant(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j_) return n;
                if (!is_consonant(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j_; ++i)
            if (!is_consonant(i)) return true;
        return false;
    }

    bool double_consonant(int i) const {
        if (i < 1) return false;
        if (w_[static_cast<size_t>(i)] != w_[static_cast<size_t>(i - 1)]) return false;
        return is_consonant(i);
    }

    // consonant-vowel-consonant ending at i, final consonant not w, x or y.
    bool ends_cvc(int i) const {
        if (i < 2 || !is_consonant(i) || is_consonant(i - 1) || !is_consonant(i - 2))
            return false;
        char c = w_[static_cast<size_t>(i)];
        return c != 'w' && c != 'x' && c != 'y';
    }

    // On match, j_ is set to the last index of the remaining stem.
    bool ends(std::string_view s) {
        if (s.size() > w_.size()) return false;
        if (w_.compare(w_.size() - s.size(), s.size(), s) != 0) return false;
        j_ = static_cast<int>(w_.size() - s.size()) - 1;
        return true;
    }

    void set_to(std::string_view s) {
        w_.resize(static_cast<size_t>(j_ + 1));
        w_.append(s);
    }

    void chop_to_stem() { w_.resize(static_cast<size_t>(j_ + 1)); }

    void replace_if_stem_has_measure(std::string_view s) {
        if (measure() > 0) set_to(s);
    }

    // plurals: sses -> ss, ies -> i, trailing s dropped after a non-s
    void step1a() {
        if (w_.back() != 's') return;
        if (ends("sses"))
            w_.resize(w_.size() - 2);
        else if (ends("ies"))
            set_to("i");
        else if (w_[w_.size() - 2] != 's')
            w_.pop_back();
    }

    // -eed, -ed, -ing, with the restore rules at/bl/iz, undoubling, and +e
    void step1b() {
        if (ends("eed")) {
            if (measure() > 0) w_.pop_back();
            return;
        }
        if (!((ends("ed") || ends("ing")) && vowel_in_stem())) return;
        chop_to_stem();
        j_ = last();
        if (ends("at"))
            set_to("ate");
        else if (ends("bl"))
            set_to("ble");
        else if (ends("iz"))
            set_to("ize");
        else if (double_consonant(last())) {
            char c = w_.back();
            if (c != 'l' && c != 's' && c != 'z') w_.pop_back();
        } else if (measure() == 1 && ends_cvc(last())) {
            w_ += 'e';
        }
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) w_.back() = 'i';
    }

    // double suffixes mapped to single ones, keyed on the penultimate letter
    void step2() {
        if (w_.size() < 2) return;
        switch (w_[w_.size() - 2]) {
            case 'a':
                if (ends("ational")) { replace_if_stem_has_measure("ate"); break; }
                if (ends("tional")) { replace_if_stem_has_measure("tion"); break; }
                break;
            case 'c':
                if (ends("enci")) { replace_if_stem_has_measure("ence"); break; }
                if (ends("anci")) { replace_if_stem_has_measure("ance"); break; }
                break;
            case 'e':
                if (ends("izer")) { replace_if_stem_has_measure("ize"); break; }
                break;
            case 'l':
                if (ends("bli")) { replace_if_stem_has_measure("ble"); break; }
                if (ends("alli")) { replace_if_stem_has_measure("al"); break; }
                if (ends("entli")) { replace_if_stem_has_measure("ent"); break; }
                if (ends("eli")) { replace_if_stem_has_measure("e"); break; }
                if (ends("ousli")) { replace_if_stem_has_measure("ous"); break; }
                break;
            case 'o':
                if (ends("ization")) { replace_if_stem_has_measure("ize"); break; }
                if (ends("ation")) { replace_if_stem_has_measure("ate"); break; }
                if (ends("ator")) { replace_if_stem_has_measure("ate"); break; }
                break;
            case 's':
                if (ends("alism")) { replace_if_stem_has_measure("al"); break; }
                if (ends("iveness")) { replace_if_stem_has_measure("ive"); break; }
                if (ends("fulness")) { replace_if_stem_has_measure("ful"); break; }
                if (ends("ousness")) { replace_if_stem_has_measure("ous"); break; }
                break;
            case 't':
                if (ends("aliti")) { replace_if_stem_has_measure("al"); break; }
                if (ends("iviti")) { replace_if_stem_has_measure("ive"); break; }
                if (ends("biliti")) { replace_if_stem_has_measure("ble"); break; }
                break;
            case 'g':
                if (ends("logi")) { replace_if_stem_has_measure("log"); break; }
                break;
            default:
                break;
        }
    }

    void step3() {
        switch (w_.back()) {
            case 'e':
                if (ends("icate")) { replace_if_stem_has_measure("ic"); break; }
                if (ends("ative")) { replace_if_stem_has_measure(""); break; }
                if (ends("alize")) { replace_if_stem_has_measure("al"); break; }
                break;
            case 'i':
                if (ends("iciti")) { replace_if_stem_has_measure("ic"); break; }
                break;
            case 'l':
                if (ends("ical")) { replace_if_stem_has_measure("ic"); break; }
                if (ends("ful")) { replace_if_stem_has_measure(""); break; }
                break;
            case 's':
                if (ends("ness")) { replace_if_stem_has_measure(""); break; }
                break;
            default:
                break;
        }
    }

    // drop residual suffixes when m > 1; -ion only after s or t
    void step4() {
        if (w_.size() < 2) return;
        bool matched = false;
        switch (w_[w_.size() - 2]) {
            case 'a': matched = ends("al"); break;
            case 'c': matched = ends("ance") || ends("ence"); break;
            case 'e': matched = ends("er"); break;
            case 'i': matched = ends("ic"); break;
            case 'l': matched = ends("able") || ends("ible"); break;
            case 'n': matched = ends("ant") || ends("ement") || ends("ment") || ends("ent"); break;
            case 'o':
                matched = (ends("ion") && j_ >= 0 &&
                           (w_[static_cast<size_t>(j_)] == 's' || w_[static_cast<size_t>(j_)] == 't')) ||
                          ends("ou");
                break;
            case 's': matched = ends("ism"); break;
            case 't': matched = ends("ate") || ends("iti"); break;
            case 'u': matched = ends("ous"); break;
            case 'v': matched = ends("ive"); break;
            case 'z': matched = ends("ize"); break;
            default: break;
        }
        if (matched && measure() > 1) chop_to_stem();
    }

    // final -e removal and ll -> l
    void step5() {
        j_ = last();
        if (w_.back() == 'e') {
            int a = measure();
            if (a > 1 || (a == 1 && !ends_cvc(last() - 1))) w_.pop_back();
        }
        j_ = last();
        if (w_.back() == 'l' && double_consonant(last()) && measure() > 1) w_.pop_back();
    }
};

}  // namespace detail

/// Porter stem of a lowercase token. Tokens containing anything outside
/// a-z (digits, punctuation) are returned unchanged; so are tokens of
/// length <= 2. Not idempotent in general.
inline std::string porter_stem(std::string_view token) {
    for (char c : token)
        if (c < 'a' || c > 'z') return std::string(token);
    std::string word(token);
    detail::PorterStemmer stemmer(word);
    stemmer.run();
    return word;
}

}  // namespace tonesum
