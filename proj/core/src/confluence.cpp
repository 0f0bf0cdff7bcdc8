#include "jforge/freealg.hpp"

namespace jforge {

namespace {

struct Ambiguity {
    Word word;
    NCPoly left, right;
    std::string between;
};

}  // namespace

CheckReport confluence_check(const RewriteSystem& rs, unsigned max_deg, const std::string& name) {
    CheckReport rep;
    rep.name = name;
    rep.anchor = "normal-ordering";
    ScopedTimer timer(rep.ms);
    const auto& rules = rs.rules();
    std::size_t checked = 0, skipped = 0, unresolved = 0;

    auto resolve = [&](const Ambiguity& amb) {
        ++checked;
        const NCPoly diff = rs.normal_form(amb.left) - rs.normal_form(amb.right);
        if (!diff.is_zero()) {
            ++unresolved;
            if (unresolved <= 20) rep.fail(amb.word.str() + " [" + amb.between + "]: " + diff.str());
            else rep.pass = false;
        }
    };

    for (const auto& r1 : rules) {
        const Word& l1 = r1.lhs;
        for (const auto& r2 : rules) {
            const Word& l2 = r2.lhs;
            // overlap: proper suffix of l1 equals proper prefix of l2
            for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
                if (l1.sub(l1.size() - k, k) != l2.sub(0, k)) continue;
                const Word tail = l2.sub(k, l2.size() - k);
                const Word head = l1.sub(0, l1.size() - k);
                const Word w = l1 * tail;
                if (w.size() > max_deg) {
                    ++skipped;
                    continue;
                }
                Ambiguity amb{w, r1.rhs * NCPoly(tail), NCPoly(head) * r2.rhs, l1.str() + " / " + l2.str()};
                resolve(amb);
            }
            // inclusion: l2 is a proper subword of l1
            if (l2.size() < l1.size()) {
                for (std::size_t i = 0; i + l2.size() <= l1.size(); ++i) {
                    if (l1.sub(i, l2.size()) != l2) continue;
                    if (l1.size() > max_deg) {
                        ++skipped;
                        continue;
                    }
                    Ambiguity amb{l1, r1.rhs,
                                  NCPoly(l1.sub(0, i)) * r2.rhs * NCPoly(l1.sub(i + l2.size(), l1.size() - i - l2.size())),
                                  l1.str() + " > " + l2.str()};
                    resolve(amb);
                }
            }
        }
    }
    if (unresolved > 20) rep.details.push_back("... " + std::to_string(unresolved - 20) + " more unresolved");
    rep.note(std::to_string(rules.size()) + " rules, " + std::to_string(checked) + " critical pairs, " +
             std::to_string(unresolved) + " unresolved, " + std::to_string(skipped) + " skipped above degree " +
             std::to_string(max_deg));
    return rep;
}

}  // namespace jforge
