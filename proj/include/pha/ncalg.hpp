#pragma once

#include "pha/matrix.hpp"

namespace pha {

/// Word in the free algebra: a sequence of letter indices.
using Word = std::vector<int>;

/// Degree-lexicographic word order using the declared letter order.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Sparse element of the free algebra over Scalar.
class FreePoly {
public:
    FreePoly() : nletters_(0) {}
    explicit FreePoly(size_t nletters) : nletters_(nletters) {}

    static FreePoly one(size_t nletters, FieldPtr field);
    static FreePoly letter(size_t nletters, int i, FieldPtr field);

    size_t nletters() const { return nletters_; }
    const std::map<Word, Scalar, WordOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Scalar& c);
    Scalar coeff(const Word& w) const;

    FreePoly operator+(const FreePoly& o) const;
    FreePoly operator-(const FreePoly& o) const;
    FreePoly operator-() const;
    FreePoly operator*(const FreePoly& o) const; // word concatenation
    FreePoly operator*(const Scalar& s) const;

    bool operator==(const FreePoly& o) const {
        return nletters_ == o.nletters_ && terms_ == o.terms_;
    }
    bool operator!=(const FreePoly& o) const { return !(*this == o); }

    /// Largest word in the order; throws on zero.
    const Word& leading_word() const;

    long weighted_degree(const WeightVector& w) const; // -1 for zero
    std::string to_string(const std::vector<std::string>& letters) const;

private:
    size_t nletters_;
    std::map<Word, Scalar, WordOrder> terms_;
};

/// Finite presentation of an associative algebra by letters and relations.
struct Presentation {
    FieldPtr field;
    std::vector<std::string> letters;
    std::vector<FreePoly> relations;
    WeightVector weights; // one per letter, default all 1

    size_t nletters() const { return letters.size(); }
};

Presentation make_presentation(FieldPtr field, std::vector<std::string> letters,
                               std::vector<FreePoly> relations,
                               WeightVector weights = {});

/// All words of weighted degree exactly d, in the word order.
std::vector<Word> words_of_degree(const Presentation& Pr, int d);

/// Dimension of the degree-d component: #words minus the rank of the span
/// of w * r * w' over all relations r, computed exactly.  Requires every
/// relation homogeneous and numeric coefficients.
size_t graded_dimension(const Presentation& Pr, int d);

/// Dimension of the filtered piece of degree <= d for inhomogeneous
/// relations: #words of degree <= d minus the rank of all products of
/// degree <= d.
size_t filtered_dimension(const Presentation& Pr, int d);

/// Rewrites f to a fixpoint using the relations as rules oriented by the
/// word order (leading word replaced by the lower terms).  Confluence is
/// not assumed; pair with dimension counts.  Throws if an intermediate
/// term exceeds degcap.
FreePoly normal_form(const Presentation& Pr, const FreePoly& f, int degcap);

/// "k< letters | relations >" with canonical term order.
std::string presentation_to_string(const Presentation& Pr);

} // namespace pha
