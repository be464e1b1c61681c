#include "qalg/free_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace qalg {

namespace {

std::uint64_t pack_lex(NodeSet::Mask mask)
{
    std::uint64_t key = 0;
    int slot = 0;
    for (int e = 1; e <= kMaxNodes; ++e)
        if ((mask >> (e - 1)) & 1u) {
            key |= std::uint64_t(e - 1) << (4 * (15 - slot));
            ++slot;
        }
    return key;
}

std::string mask_str(NodeSet::Mask mask)
{
    std::string s = "{";
    bool first = true;
    for (int e = 1; e <= kMaxNodes; ++e)
        if ((mask >> (e - 1)) & 1u) {
            if (!first)
                s += ',';
            s += std::to_string(e);
            first = false;
        }
    return s + "}";
}

}  // namespace

Generator::Generator(Kind k, NodeSet::Mask mask, int index)
    : kind_(k),
      size_(static_cast<std::uint8_t>(__builtin_popcount(mask))),
      index_(static_cast<std::uint8_t>(index)),
      mask_(mask),
      lex_(pack_lex(mask))
{
}

Generator Generator::z(const NodeSet& a, int i)
{
    if (i < 1 || i > a.universe())
        throw InputError("z index " + std::to_string(i) + " outside 1.." + std::to_string(a.universe()));
    if (a.contains(i))
        throw InputError("z(" + a.str() + "," + std::to_string(i) + ") requires i not in A");
    return Generator(Kind::Z, a.mask(), i);
}

Generator Generator::u(const NodeSet& a)
{
    if (a.empty())
        throw InputError("u(empty) is the unit, not a generator");
    return Generator(Kind::U, a.mask(), 0);
}

int Generator::max_vertex() const
{
    int m = index_;
    if (mask_)
        m = std::max(m, 32 - __builtin_clz(mask_));
    return m;
}

std::string Generator::str() const
{
    if (kind_ == Kind::U)
        return "u(" + mask_str(mask_) + ")";
    return "z(" + mask_str(mask_) + "," + std::to_string(index_) + ")";
}

std::string to_string(const Monomial& m)
{
    if (m.empty())
        return "1";
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k)
            s += '*';
        s += m[k].str();
    }
    return s;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const Rational& c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Generator& g, int n) : n_(n)
{
    check_universe(n);
    if (g.max_vertex() > n)
        throw InputError("symbol " + g.str() + " exceeds n=" + std::to_string(n));
    terms_.emplace(Monomial{g}, Rational(1));
}

Polynomial::Polynomial(const Monomial& m, const Rational& c, int n) : n_(n)
{
    check_universe(n);
    for (const auto& g : m)
        if (g.max_vertex() > n)
            throw InputError("symbol " + g.str() + " exceeds n=" + std::to_string(n));
    if (c != 0)
        terms_.emplace(m, c);
}

Polynomial Polynomial::z(const NodeSet& a, int i) { return Polynomial(Generator::z(a, i), a.universe()); }

Polynomial Polynomial::u(const NodeSet& a)
{
    if (a.empty()) {
        Polynomial one(Rational(1));
        one.n_ = a.universe();
        return one;
    }
    return Polynomial(Generator::u(a), a.universe());
}

Rational Polynomial::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const
{
    if (terms_.empty())
        return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

std::vector<Generator> Polynomial::symbols() const
{
    std::set<Generator> seen;
    for (const auto& [m, c] : terms_)
        seen.insert(m.begin(), m.end());
    return {seen.begin(), seen.end()};
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int Polynomial::merge_universe(const Polynomial& o) const
{
    if (n_ == 0)
        return o.n_;
    if (o.n_ == 0 || o.n_ == n_)
        return n_;
    throw InputError("polynomials over different universes (n=" + std::to_string(n_) + " vs n=" +
                     std::to_string(o.n_) + ")");
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    n_ = merge_universe(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    n_ = merge_universe(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, v] : r.terms_)
        v = -v;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial r;
    r.n_ = a.merge_universe(b);
    Monomial w;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            w.assign(ma.begin(), ma.end());
            w.insert(w.end(), mb.begin(), mb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        const Rational mag = abs(c);
        if (m.empty()) {
            s += mag.get_str();
        } else {
            if (mag != 1)
                s += mag.get_str() + "*";
            s += to_string(m);
        }
    }
    return s;
}

Polynomial commutator(const Polynomial& p, const Polynomial& q) { return p * q - q * p; }

namespace {

Polynomial substitute_impl(const Polynomial& p, const SubstitutionMap& images, bool strict)
{
    Polynomial result;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term(c);
        for (const auto& g : m) {
            auto it = images.find(g);
            if (it != images.end()) {
                term = term * it->second;
            } else if (strict) {
                throw std::invalid_argument("no image for symbol " + g.str());
            } else {
                term = term * Polynomial(g, p.universe());
            }
            if (term.is_zero())
                break;
        }
        result += term;
    }
    return result;
}

}  // namespace

Polynomial substitute(const Polynomial& p, const SubstitutionMap& images)
{
    return substitute_impl(p, images, true);
}

Polynomial substitute_partial(const Polynomial& p, const SubstitutionMap& images)
{
    return substitute_impl(p, images, false);
}

Polynomial graded_component(const Polynomial& p, int d)
{
    if (d < 0)
        throw std::invalid_argument("negative degree");
    Polynomial r;
    for (const auto& [m, c] : p.terms())
        if (static_cast<int>(m.size()) == d)
            r.add_term(m, c);
    return r;
}

std::uint64_t word_count(std::size_t alphabet_size, int d, std::uint64_t cap)
{
    if (d < 0)
        throw std::invalid_argument("negative degree");
    std::uint64_t count = 1;
    for (int k = 0; k < d; ++k) {
        if (alphabet_size != 0 && count > cap / alphabet_size)
            throw std::length_error("word count " + std::to_string(alphabet_size) + "^" + std::to_string(d) +
                                    " exceeds cap " + std::to_string(cap));
        count *= alphabet_size;
    }
    if (count > cap)
        throw std::length_error("word count exceeds cap " + std::to_string(cap));
    return count;
}

std::vector<Monomial> enumerate_monomials(const std::vector<Generator>& alphabet, int d, std::uint64_t cap)
{
    if (alphabet.empty() && d > 0)
        throw std::invalid_argument("empty alphabet");
    const std::uint64_t count = word_count(alphabet.size(), d, cap);
    std::vector<Monomial> out;
    out.reserve(count);
    std::vector<std::size_t> digits(d, 0);
    for (std::uint64_t w = 0; w < count; ++w) {
        Monomial m(d, alphabet.empty() ? Generator::u(NodeSet(1, {1})) : alphabet[0]);
        for (int k = 0; k < d; ++k)
            m[k] = alphabet[digits[k]];
        out.push_back(std::move(m));
        for (int k = d - 1; k >= 0; --k) {
            if (++digits[k] < alphabet.size())
                break;
            digits[k] = 0;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | symbol | '[' expr ',' expr ']' | '(' expr ')'
//   symbol := 'u' '(' set ')' | 'z' '(' set ',' int ')'
//   set    := '{' [int (',' int)*] '}'

namespace {

class Parser {
public:
    Parser(std::string_view text, int n) : text_(text), n_(n) { check_universe(n); }

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    std::string integer()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    int vertex()
    {
        const std::string digits = integer();
        if (digits.size() > 3 || std::stoi(digits) < 1 || std::stoi(digits) > n_)
            fail("vertex " + digits + " outside 1.." + std::to_string(n_));
        return std::stoi(digits);
    }

    NodeSet set()
    {
        expect('{');
        std::vector<int> elems;
        if (!accept('}')) {
            do
                elems.push_back(vertex());
            while (accept(','));
            expect('}');
        }
        return NodeSet(n_, elems);
    }

    Polynomial expr()
    {
        Polynomial acc;
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Polynomial t = term();
        acc += negate ? -t : t;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return acc;
    }

    Polynomial factor()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = integer();
            if (accept('/')) {
                std::string den = integer();
                if (den.find_first_not_of('0') == std::string::npos)
                    fail("zero denominator");
                num += "/" + den;
            }
            Rational r(num);
            r.canonicalize();
            Polynomial p(r);
            return p * Polynomial::u(NodeSet(n_));
        }
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            expect(')');
            return p;
        }
        if (c == '[') {
            ++pos_;
            Polynomial a = expr();
            expect(',');
            Polynomial b = expr();
            expect(']');
            return commutator(a, b);
        }
        if (c == 'u') {
            ++pos_;
            expect('(');
            NodeSet a = set();
            expect(')');
            return Polynomial::u(a);
        }
        if (c == 'z') {
            ++pos_;
            expect('(');
            NodeSet a = set();
            expect(',');
            const int i = vertex();
            expect(')');
            try {
                return Polynomial::z(a, i);
            } catch (const InputError& e) {
                fail(e.what());
            }
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int n_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n) { return Parser(text, n).parse(); }

}  // namespace qalg
