#include "pha/ncalg.hpp"

#include <sstream>

namespace pha {

FreePoly FreePoly::one(size_t nletters, FieldPtr field) {
    FreePoly p(nletters);
    p.add_term({}, Scalar::one(std::move(field)));
    return p;
}

FreePoly FreePoly::letter(size_t nletters, int i, FieldPtr field) {
    if (i < 0 || (size_t)i >= nletters) throw pha_error("letter index out of range");
    FreePoly p(nletters);
    p.add_term({i}, Scalar::one(std::move(field)));
    return p;
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    for (int l : w)
        if (l < 0 || (size_t)l >= nletters_) throw pha_error("letter index out of range");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar FreePoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    if (it == terms_.end()) return Scalar();
    return it->second;
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
    if (nletters_ != o.nletters_) throw pha_error("alphabet mismatch");
    FreePoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

FreePoly FreePoly::operator-(const FreePoly& o) const { return *this + (-o); }

FreePoly FreePoly::operator-() const {
    FreePoly r(nletters_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

FreePoly FreePoly::operator*(const FreePoly& o) const {
    if (nletters_ != o.nletters_) throw pha_error("alphabet mismatch");
    FreePoly r(nletters_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

FreePoly FreePoly::operator*(const Scalar& s) const {
    FreePoly r(nletters_);
    for (const auto& [w, c] : terms_) r.add_term(w, c * s);
    return r;
}

const Word& FreePoly::leading_word() const {
    if (terms_.empty()) throw pha_error("zero polynomial has no leading word");
    return terms_.rbegin()->first;
}

long FreePoly::weighted_degree(const WeightVector& w) const {
    long best = -1;
    for (const auto& [word, c] : terms_) {
        long d = 0;
        for (int l : word) d += w[l];
        best = std::max(best, d);
    }
    return best;
}

std::string FreePoly::to_string(const std::vector<std::string>& letters) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        std::string cs = c.to_string();
        bool multi = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        bool neg = !multi && cs.size() > 1 && cs[0] == '-';
        std::string body = neg ? cs.substr(1) : cs;
        if (multi) body = "(" + cs + ")";
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (w.empty() || body != "1") {
            os << body;
            wrote = true;
        }
        for (int l : w) {
            if (wrote) os << "*";
            wrote = true;
            os << letters[l];
        }
    }
    return os.str();
}

Presentation make_presentation(FieldPtr field, std::vector<std::string> letters,
                               std::vector<FreePoly> relations, WeightVector weights) {
    if (weights.empty()) weights.assign(letters.size(), 1);
    if (weights.size() != letters.size()) throw pha_error("weight arity mismatch");
    for (int w : weights)
        if (w < 1) throw pha_error("weights must be positive");
    for (const auto& r : relations) {
        if (r.is_zero()) throw pha_error("relations must be nonzero");
        if (r.nletters() != letters.size()) throw pha_error("alphabet mismatch");
    }
    return Presentation{std::move(field), std::move(letters), std::move(relations),
                        std::move(weights)};
}

namespace {

void enumerate_words(const Presentation& Pr, int d, Word& acc, std::vector<Word>& out) {
    if (d == 0) {
        out.push_back(acc);
        return;
    }
    for (int l = 0; l < (int)Pr.nletters(); ++l) {
        if (Pr.weights[l] > d) continue;
        acc.push_back(l);
        enumerate_words(Pr, d - Pr.weights[l], acc, out);
        acc.pop_back();
    }
}

long word_degree(const Presentation& Pr, const Word& w) {
    long d = 0;
    for (int l : w) d += Pr.weights[l];
    return d;
}

/// Rank of the span of { w * r * w' } with total degree in [dlo, dhi],
/// coordinates over all words of those degrees.
size_t relation_span_rank(const Presentation& Pr, int dlo, int dhi) {
    std::map<Word, size_t, WordOrder> col_index;
    std::vector<std::vector<std::pair<size_t, CycRat>>> rows;
    for (const auto& r : Pr.relations) {
        long rd = r.weighted_degree(Pr.weights);
        for (int total = dlo; total <= dhi; ++total) {
            for (int left = 0; left + rd <= total; ++left) {
                int right = total - left - (int)rd;
                std::vector<Word> lw, rw;
                Word acc;
                enumerate_words(Pr, left, acc, lw);
                enumerate_words(Pr, right, acc, rw);
                for (const auto& a : lw)
                    for (const auto& b : rw) {
                        std::vector<std::pair<size_t, CycRat>> row;
                        for (const auto& [w, c] : r.terms()) {
                            Word full = a;
                            full.insert(full.end(), w.begin(), w.end());
                            full.insert(full.end(), b.begin(), b.end());
                            // inhomogeneous relations spread across degrees;
                            // keep only columns within the window
                            long fd = word_degree(Pr, full);
                            if (fd > dhi) throw pha_error("degree overflow");
                            auto [it, fresh] =
                                col_index.emplace(full, col_index.size());
                            row.emplace_back(it->second, c.numeric());
                        }
                        rows.push_back(std::move(row));
                    }
            }
        }
    }
    ExactMatrix M(rows.size(), col_index.size(), Pr.field);
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i]) {
            Scalar cur = M.at(i, j);
            M.at(i, j) = (cur.is_zero() ? Scalar(v) : cur + Scalar(v));
        }
    return M.rank();
}

} // namespace

std::vector<Word> words_of_degree(const Presentation& Pr, int d) {
    std::vector<Word> out;
    Word acc;
    enumerate_words(Pr, d, acc, out);
    return out;
}

size_t graded_dimension(const Presentation& Pr, int d) {
    for (const auto& r : Pr.relations) {
        long rd = r.weighted_degree(Pr.weights);
        for (const auto& [w, c] : r.terms())
            if (word_degree(Pr, w) != rd)
                throw pha_error("graded dimension needs homogeneous relations");
    }
    size_t nwords = words_of_degree(Pr, d).size();
    if (Pr.relations.empty()) return nwords;
    return nwords - relation_span_rank(Pr, d, d);
}

size_t filtered_dimension(const Presentation& Pr, int d) {
    size_t nwords = 0;
    for (int e = 0; e <= d; ++e) nwords += words_of_degree(Pr, e).size();
    if (Pr.relations.empty()) return nwords;
    return nwords - relation_span_rank(Pr, 0, d);
}

FreePoly normal_form(const Presentation& Pr, const FreePoly& f, int degcap) {
    struct Rule {
        Word lead;
        FreePoly rest; // lead rewrites to rest
    };
    std::vector<Rule> rules;
    // the leading word is the order maximum, so every rule replaces a word
    // by strictly smaller ones and rewriting terminates
    for (const auto& r : Pr.relations) {
        const Word& lead = r.leading_word();
        Scalar lc = r.coeff(lead);
        FreePoly rest(Pr.nletters());
        for (const auto& [w, c] : r.terms()) {
            if (w == lead) continue;
            rest.add_term(w, -(c * lc.inverse()));
        }
        rules.push_back({lead, rest});
    }

    FreePoly cur = f;
    bool changed = true;
    while (changed) {
        changed = false;
        // largest reducible term, leftmost occurrence, first matching rule
        for (auto it = cur.terms().rbegin(); it != cur.terms().rend() && !changed; ++it) {
            const Word& w = it->first;
            if (word_degree(Pr, w) > degcap) throw pha_error("degree overflow");
            for (size_t pos = 0; pos + 0 <= w.size() && !changed; ++pos)
                for (const auto& rule : rules) {
                    size_t L = rule.lead.size();
                    if (pos + L > w.size()) continue;
                    if (!std::equal(rule.lead.begin(), rule.lead.end(), w.begin() + pos))
                        continue;
                    FreePoly pre(Pr.nletters()), post(Pr.nletters());
                    pre.add_term(Word(w.begin(), w.begin() + pos), Scalar::one(Pr.field));
                    post.add_term(Word(w.begin() + pos + L, w.end()), it->second);
                    cur = cur + pre * rule.rest * post - [&] {
                        FreePoly t(Pr.nletters());
                        t.add_term(w, it->second);
                        return t;
                    }();
                    changed = true;
                    break;
                }
        }
    }
    return cur;
}

std::string presentation_to_string(const Presentation& Pr) {
    std::ostringstream os;
    os << "k< ";
    for (size_t i = 0; i < Pr.letters.size(); ++i) {
        if (i) os << ", ";
        os << Pr.letters[i];
    }
    if (!Pr.relations.empty()) {
        os << " | ";
        for (size_t i = 0; i < Pr.relations.size(); ++i) {
            if (i) os << ", ";
            os << Pr.relations[i].to_string(Pr.letters);
        }
    }
    os << " >";
    return os.str();
}

} // namespace pha
