#include "gbs/words.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gbs {

GroupWord GroupWord::inverse() const
{
    GroupWord w;
    w.syllables.reserve(syllables.size());
    for (auto it = syllables.rbegin(); it != syllables.rend(); ++it)
        w.syllables.push_back({it->gen, -it->exp});
    return w;
}

GroupWord concat(const GroupWord &a, const GroupWord &b)
{
    GroupWord w = a;
    w.syllables.insert(w.syllables.end(), b.syllables.begin(), b.syllables.end());
    return free_reduce(w);
}

GroupWord power_word(const std::string &gen, const Int &exp)
{
    GroupWord w;
    if (exp != 0)
        w.syllables.push_back({gen, exp});
    return w;
}

GroupWord Commutator::word() const
{
    GroupWord w;
    w.syllables = {{left_gen, -left_exp},
                   {right_gen, -right_exp},
                   {left_gen, left_exp},
                   {right_gen, right_exp}};
    return free_reduce(w);
}

GroupWord free_reduce(const GroupWord &w)
{
    GroupWord out;
    for (const Syllable &s : w.syllables) {
        if (s.exp == 0)
            continue;
        if (!out.syllables.empty() && out.syllables.back().gen == s.gen) {
            out.syllables.back().exp += s.exp;
            if (out.syllables.back().exp == 0)
                out.syllables.pop_back();
        } else {
            out.syllables.push_back(s);
        }
    }
    return out;
}

namespace {

bool name_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct WordLexer {
    const std::string &text;
    std::size_t pos = 0;

    explicit WordLexer(const std::string &t) : text(t) {}

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool done()
    {
        skip_ws();
        return pos >= text.size();
    }

    char peek()
    {
        skip_ws();
        return text[pos];
    }

    void expect(char c)
    {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw std::domain_error(std::string("word syntax: expected '") + c + "'");
        ++pos;
    }

    std::string name()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && name_char(text[pos]))
            ++pos;
        if (pos == start)
            throw std::domain_error("word syntax: expected a generator name");
        return text.substr(start, pos - start);
    }

    Int integer()
    {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        return parse_int(text.substr(start, pos - start));
    }

    Syllable term()
    {
        std::string g = name();
        Int e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = integer();
        }
        return {g, e};
    }
};

} // namespace

GroupWord parse_word(const std::string &text)
{
    WordLexer lex(text);
    GroupWord w;
    bool first = true;
    while (!lex.done()) {
        if (!first) {
            if (lex.peek() == '*')
                lex.expect('*');
        }
        first = false;
        if (lex.done())
            throw std::domain_error("word syntax: trailing '*'");
        if (lex.peek() == '[') {
            lex.expect('[');
            Syllable l = lex.term();
            lex.expect(',');
            Syllable r = lex.term();
            lex.expect(']');
            Commutator c{l.gen, l.exp, r.gen, r.exp};
            for (const Syllable &s : c.word().syllables)
                w.syllables.push_back(s);
        } else {
            w.syllables.push_back(lex.term());
        }
    }
    return free_reduce(w);
}

std::string to_string(const GroupWord &w)
{
    if (w.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const Syllable &s : w.syllables) {
        if (!first)
            os << " * ";
        first = false;
        os << s.gen;
        if (s.exp != 1)
            os << "^" << s.exp.get_str();
    }
    return os.str();
}

std::string to_string(const Commutator &c)
{
    std::ostringstream os;
    os << "[" << c.left_gen;
    if (c.left_exp != 1)
        os << "^" << c.left_exp.get_str();
    os << ", " << c.right_gen;
    if (c.right_exp != 1)
        os << "^" << c.right_exp.get_str();
    os << "]";
    return os.str();
}

} // namespace gbs
