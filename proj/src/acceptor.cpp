#include "pangram/acceptor.hpp"

#include <memory>

#include "pangram/error.hpp"

namespace pangram {

Acceptor Acceptor::finite_dfa(Dfa x) {
    Acceptor a(std::move(x));
    a.finite = true;
    return a;
}

Acceptor Acceptor::cofinite_dfa(Dfa x) {
    Acceptor a(std::move(x));
    a.cofinite = true;
    return a;
}

const Alphabet& Acceptor::alphabet() const {
    return std::visit(
        [](const auto& x) -> const Alphabet& {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Cfg>) {
                return x.terminals();
            } else {
                return x.alphabet();
            }
        },
        body);
}

std::string_view Acceptor::kind() const {
    static constexpr std::string_view names[] = {"dfa", "nfa", "cfg", "slt", "spt"};
    return names[body.index()];
}

std::function<bool(const Word&)> make_membership(const Acceptor& a) {
    if (const auto* x = a.as<Dfa>()) {
        return [x](const Word& w) { return accepts(*x, w); };
    }
    if (const auto* x = a.as<Nfa>()) {
        return [x](const Word& w) { return accepts(*x, w); };
    }
    if (const auto* x = a.as<Cfg>()) {
        auto parser = std::make_shared<CykParser>(*x);
        return [parser](const Word& w) { return parser->accepts(w); };
    }
    if (const auto* x = a.as<SltSpec>()) {
        return [x](const Word& w) { return slt_member(*x, w); };
    }
    const auto* x = a.as<SptSpec>();
    return [x](const Word& w) { return spt_member(*x, w); };
}

void validate_tags(const Acceptor& a) {
    if (!a.finite && !a.cofinite) {
        return;
    }
    const auto* x = a.as<Dfa>();
    if (!x) {
        throw InputError("tags: only dfa documents may carry 'finite' or 'cofinite' tags");
    }
    if (a.finite && a.cofinite) {
        throw InputError("tags: a language over a nonempty alphabet cannot be both finite and cofinite");
    }
    if (a.finite && !is_finite_language(*x)) {
        throw InputError("tags: dfa is tagged 'finite' but accepts infinitely many words");
    }
    if (a.cofinite && !is_finite_language(complement_dfa(*x))) {
        throw InputError("tags: dfa is tagged 'cofinite' but rejects infinitely many words");
    }
}

} // namespace pangram
