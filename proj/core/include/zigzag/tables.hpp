#pragma once

#include <string>
#include <vector>

#include "zigzag/generators.hpp"
#include "zigzag/surgery.hpp"

namespace zigzag {

// One identification row of a case table: the images of the labeled face
// vertices and the zigzag word(s) of the resulting connected sum.
struct CaseRow {
    std::string identification;      // e.g. "1',a',2'" — images of (a,1,2) or (a,b,c)
    std::vector<std::string> words;  // one entry per zigzag
};

struct CaseTable {
    int number = 0;  // 1..10
    bool core = true;  // the two-row text cases of the odd+odd / even+even
                       // analyses carry core=false
    std::string title;
    FaceClass left{}, right{};
    std::vector<CaseRow> rows;
};

// The full catalog of identification tables for all face-class pairs.
const std::vector<CaseTable>& case_tables();

struct TableRowResult {
    int table = 0;
    bool core = true;
    std::string identification;
    std::string instances;  // "ex4a + BP_3"
    std::string expected;   // words joined with " | "
    std::string actual;
    bool match = false;
};

// Replays every table row on the fixed corpus instances (odd: BP_3/BP_7,
// even: BP_5/BP_9, (2,2,2)-first: ex4a/ex5a, (2,2,2)-second: TS_33/TS_35)
// and compares segment words up to rotation and reversal.
std::vector<TableRowResult> reproduce_tables(const std::vector<CorpusEntry>& corpus);
std::vector<TableRowResult> reproduce_tables();

// Word multiset comparison up to cyclic rotation and global reversal,
// optionally also flipping the direction convention of whole-zigzag
// segments (their letter orientation is not pinned by any anchor).
bool words_equivalent(const std::vector<SegmentWord>& expected,
                      const std::vector<SegmentWord>& actual,
                      const std::vector<WordLetter>& flippable = {});

}  // namespace zigzag
