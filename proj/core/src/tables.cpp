#include "zigzag/tables.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "zigzag/graph_io.hpp"

namespace zigzag {

namespace {

CaseTable table(int number, bool core, std::string title, FaceClass l, FaceClass r,
                std::vector<CaseRow> rows) {
    CaseTable t;
    t.number = number;
    t.core = core;
    t.title = std::move(title);
    t.left = l;
    t.right = r;
    t.rows = std::move(rows);
    return t;
}

}  // namespace

const std::vector<CaseTable>& case_tables() {
    using FC = FaceClass;
    static const std::vector<CaseTable> tables = {
        table(1, true, "odd+odd, apex off apex: two zigzags", FC::OneOneTwoOdd, FC::OneOneTwoOdd,
              {
                  {"1',2',a'", {"A,B'^-1", "B,C',C,A'"}},
                  {"1',a',2'", {"B,B'", "A,A'^-1,C,C'^-1"}},
                  {"2',a',1'", {"B,A'^-1", "A,B',C,C'"}},
                  {"2',1',a'", {"A,A'", "B,C'^-1,C,B'^-1"}},
              }),
        table(1, false, "odd+odd, apex on apex: z-knotted", FC::OneOneTwoOdd, FC::OneOneTwoOdd,
              {
                  {"a',1',2'", {"A,C'^-1,B,A',C^-1,B'"}},
                  {"a',2',1'", {"A,C',B,B'^-1,C^-1,A'^-1"}},
              }),
        table(2, true, "even+even, apex off apex: z-knotted", FC::OneOneTwoEven, FC::OneOneTwoEven,
              {
                  {"1',2',a'", {"A,B',C,A',B^-1,C'^-1"}},
                  {"1',a',2'", {"A,C',C^-1,A'^-1,B,B'^-1"}},
                  {"2',a',1'", {"A,B'^-1,C^-1,A',B,C'"}},
                  {"2',1',a'", {"A,C'^-1,C,A'^-1,B^-1,B'"}},
              }),
        table(2, false, "even+even, apex on apex: three zigzags", FC::OneOneTwoEven,
              FC::OneOneTwoEven,
              {
                  {"a',1',2'", {"A,A'", "B,C'^-1", "C,B'^-1"}},
                  {"a',2',1'", {"A,A'^-1", "B,B'", "C,C'"}},
              }),
        table(3, true, "even+odd, apex on apex: z-knotted", FC::OneOneTwoEven, FC::OneOneTwoOdd,
              {
                  {"a',1',2'", {"A,A',C^-1,C',B^-1,B'"}},
                  {"a',2',1'", {"A,B'^-1,C^-1,C'^-1,B^-1,A'^-1"}},
              }),
        table(4, true, "even+odd, apex off apex: two zigzags", FC::OneOneTwoEven, FC::OneOneTwoOdd,
              {
                  {"1',2',a'", {"C,A'", "A,C',B,B'^-1"}},
                  {"1',a',2'", {"B,A'^-1", "A,B',C,C'^-1"}},
                  {"2',a',1'", {"B,B'", "A,A'^-1,C,C'"}},
                  {"2',1',a'", {"C,B'^-1", "A,C'^-1,B,A'"}},
              }),
        table(5, true, "(2,2,2)-first + odd: z-knotted", FC::TwoTwoTwoFirst, FC::OneOneTwoOdd,
              {
                  {"a',1',2'", {"A,C',B,A',C^-1,B'"}},
                  {"a',2',1'", {"A,C'^-1,B,B'^-1,C^-1,A'^-1"}},
                  {"1',2',a'", {"A,A'^-1,C^-1,C'^-1,B^-1,B'^-1"}},
                  {"1',a',2'", {"A,B'^-1,B^-1,A'^-1,C,C'^-1"}},
                  {"2',a',1'", {"A,A',B^-1,B',C,C'"}},
                  {"2',1',a'", {"A,B',C^-1,C',B^-1,A'"}},
              }),
        table(6, true, "(2,2,2)-first + even: z-knotted", FC::TwoTwoTwoFirst, FC::OneOneTwoEven,
              {
                  {"a',1',2'", {"A,B',C^-1,C',B,A'"}},
                  {"a',2',1'", {"A,C'^-1,C^-1,B'^-1,B,A'^-1"}},
                  {"1',2',a'", {"A,B'^-1,B^-1,A'^-1,C^-1,C'^-1"}},
                  {"1',a',2'", {"A,A'^-1,C,C'^-1,B^-1,B'^-1"}},
                  {"2',a',1'", {"A,A',C,B',B^-1,C'"}},
                  {"2',1',a'", {"A,C',B^-1,A',C^-1,B'"}},
              }),
        table(7, true, "(2,2,2)-first + (2,2,2)-first: z-knotted", FC::TwoTwoTwoFirst,
              FC::TwoTwoTwoFirst,
              {
                  {"a',b',c'", {"A,C',B,A',C,B'"}},
                  {"b',c',a'", {"A,B',B,C',C,A'"}},
                  {"c',a',b'", {"A,A',B,B',C,C'"}},
                  {"c',b',a'", {"A,A'^-1,B,C'^-1,C,B'^-1"}},
                  {"b',a',c'", {"A,B'^-1,B,A'^-1,C,C'^-1"}},
                  {"a',c',b'", {"A,C'^-1,B,B'^-1,C,A'^-1"}},
              }),
        table(8, true, "(2,2,2)-first + (2,2,2)-second: z-knotted", FC::TwoTwoTwoFirst,
              FC::TwoTwoTwoSecond,
              {
                  {"a',b',c'", {"A,B',C,C',B,A'"}},
                  {"b',c',a'", {"A,C',C,A',B,B'"}},
                  {"c',a',b'", {"A,A',C,B',B,C'"}},
                  {"c',b',a'", {"A,B'^-1,C,A'^-1,B,C'^-1"}},
                  {"b',a',c'", {"A,A'^-1,C,C'^-1,B,B'^-1"}},
                  {"a',c',b'", {"A,C'^-1,C,B'^-1,B,A'^-1"}},
              }),
        table(9, true, "(2,2,2)-second + odd: z-knotted", FC::TwoTwoTwoSecond, FC::OneOneTwoOdd,
              {
                  {"a',1',2'", {"A,A',C^-1,C'^-1,B^-1,B'"}},
                  {"a',2',1'", {"A,B'^-1,C^-1,C',B^-1,A'^-1"}},
                  {"1',2',a'", {"A,C',B,A'^-1,C^-1,B'^-1"}},
                  {"1',a',2'", {"A,B',B^-1,A',C,C'^-1"}},
                  {"2',a',1'", {"A,A'^-1,B^-1,B'^-1,C,C'"}},
                  {"2',1',a'", {"A,C'^-1,B,B',C^-1,A'"}},
              }),
        table(10, true, "(2,2,2)-second + even: two zigzags", FC::TwoTwoTwoSecond,
              FC::OneOneTwoEven,
              {
                  {"a',1',2'", {"A,A'", "B,B',C^-1,C'^-1"}},
                  {"a',2',1'", {"A,A'^-1", "B,C'^-1,C^-1,B'"}},
                  {"1',2',a'", {"C,A'", "A,B',B^-1,C'^-1"}},
                  {"1',a',2'", {"B,A'^-1", "A,C',C^-1,B'^-1"}},
                  {"2',a',1'", {"B,A'", "A,B'^-1,C^-1,C'"}},
                  {"2',1',a'", {"C,A'^-1", "A,C'^-1,B^-1,B'"}},
              }),
    };
    return tables;
}

namespace {

// cyclic+reversal canonical form of a word, as encoded ints
std::vector<int> canon_word(const SegmentWord& w) {
    const auto enc = [](const WordLetter& l) {
        return (l.primed ? 6 : 0) + l.index * 2 + (l.inverted ? 1 : 0);
    };
    const int n = static_cast<int>(w.size());
    std::vector<int> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (int r = 0; r < n; ++r) {
            std::vector<int> cand(n);
            for (int i = 0; i < n; ++i) {
                WordLetter l = dir == 0 ? w[(r + i) % n] : w[(r + n - i) % n];
                if (dir == 1) l.inverted = !l.inverted;
                cand[i] = enc(l);
            }
            if (best.empty() || cand < best) best = cand;
        }
    }
    return best;
}

std::vector<std::vector<int>> canon_multiset(const std::vector<SegmentWord>& ws) {
    std::vector<std::vector<int>> out;
    for (const auto& w : ws) out.push_back(canon_word(w));
    std::sort(out.begin(), out.end());
    return out;
}

SegmentWord flip_letters(const SegmentWord& w, const std::vector<WordLetter>& flips) {
    SegmentWord out = w;
    for (auto& l : out)
        for (const auto& f : flips)
            if (l.primed == f.primed && l.index == f.index) l.inverted = !l.inverted;
    return out;
}

}  // namespace

bool words_equivalent(const std::vector<SegmentWord>& expected,
                      const std::vector<SegmentWord>& actual,
                      const std::vector<WordLetter>& flippable) {
    const auto want = canon_multiset(expected);
    const size_t nf = flippable.size();
    for (size_t mask = 0; mask < (size_t{1} << nf); ++mask) {
        std::vector<WordLetter> flips;
        for (size_t i = 0; i < nf; ++i)
            if (mask & (size_t{1} << i)) flips.push_back(flippable[i]);
        std::vector<SegmentWord> flipped;
        for (const auto& w : actual) flipped.push_back(flip_letters(w, flips));
        if (canon_multiset(flipped) == want) return true;
    }
    return false;
}

namespace {

struct Instance {
    const CorpusEntry* entry;
    FaceClassification cls;
    SegmentDecomposition dec;
};

Instance make_instance(const CorpusEntry* e, FaceClass want) {
    if (!e) throw internal_error("table instance missing from corpus");
    if (!e->face_class || e->face_class->cls != want)
        throw internal_error("corpus entry " + e->id + " does not carry the face class '" +
                             to_string(want) + "' its table needs");
    Instance inst{e, *e->face_class, {}};
    inst.dec =
        segment_decomposition(e->graph, e->zigzags, e->designated_face_id, inst.cls.labels);
    return inst;
}

// identification "1',a',2'" -> images of labels[0..2] as right label slots
std::array<int, 3> parse_identification(const std::string& id, FaceClass right_class) {
    std::vector<std::string> syms;
    std::stringstream ss(id);
    std::string t;
    while (std::getline(ss, t, ',')) syms.push_back(t);
    if (syms.size() != 3) throw internal_error("bad identification: " + id);
    const bool is222 = right_class == FaceClass::TwoTwoTwoFirst ||
                       right_class == FaceClass::TwoTwoTwoSecond;
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i) {
        std::string s = syms[i];
        if (s.empty() || s.back() != '\'') throw internal_error("bad identification: " + id);
        s.pop_back();
        int slot;
        if (is222)
            slot = s == "a" ? 0 : s == "b" ? 1 : s == "c" ? 2 : -1;
        else
            slot = s == "a" ? 0 : s == "1" ? 1 : s == "2" ? 2 : -1;
        if (slot < 0) throw internal_error("bad identification symbol: " + syms[i]);
        out[i] = slot;
    }
    return out;
}

std::string words_joined(const std::vector<std::string>& ws) {
    std::string out;
    for (size_t i = 0; i < ws.size(); ++i) {
        if (i) out += " | ";
        out += ws[i];
    }
    return out;
}

}  // namespace

std::vector<TableRowResult> reproduce_tables(const std::vector<CorpusEntry>& corpus) {
    const std::map<FaceClass, std::pair<std::string, std::string>> instance_ids = {
        {FaceClass::OneOneTwoOdd, {"BP_3", "BP_7"}},
        {FaceClass::OneOneTwoEven, {"BP_5", "BP_9"}},
        {FaceClass::TwoTwoTwoFirst, {"ex4a", "ex5a"}},
        {FaceClass::TwoTwoTwoSecond, {"TS_33", "TS_35"}},
    };

    std::vector<TableRowResult> results;
    for (const auto& tab : case_tables()) {
        const auto& lid = instance_ids.at(tab.left).first;
        const auto& rid = tab.left == tab.right ? instance_ids.at(tab.right).second
                                                : instance_ids.at(tab.right).first;
        const auto left = make_instance(find_entry(corpus, lid), tab.left);
        const auto right = make_instance(find_entry(corpus, rid), tab.right);

        for (const auto& row : tab.rows) {
            TableRowResult res;
            res.table = tab.number;
            res.core = tab.core;
            res.identification = row.identification;
            res.instances = lid + " + " + rid;
            res.expected = words_joined(row.words);

            const auto slots = parse_identification(row.identification, tab.right);
            std::vector<std::pair<std::string, std::string>> images;
            for (int i = 0; i < 3; ++i)
                images.emplace_back(left.entry->graph.token(left.cls.labels[i]),
                                    right.entry->graph.token(right.cls.labels[slots[i]]));
            const auto g = make_gluing(left.entry->graph, left.dec.face, right.entry->graph,
                                       right.dec.face, images);

            const auto comp = compose_zigzags(left.dec, right.dec, g);
            std::vector<std::string> actual_strs;
            for (const auto& w : comp.words) actual_strs.push_back(word_to_string(w));
            res.actual = words_joined(actual_strs);

            std::vector<SegmentWord> expected;
            for (const auto& w : row.words) expected.push_back(word_from_string(w));
            res.match = comp.untouched.empty() && words_equivalent(expected, comp.words);
            results.push_back(std::move(res));
        }
    }
    return results;
}

std::vector<TableRowResult> reproduce_tables() { return reproduce_tables(build_corpus()); }

}  // namespace zigzag
