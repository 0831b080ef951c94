// Shared score fixtures for tests: the headline evaluation table
// (per-task averages) and its per-language breakdown, plus the
// transliteration-variant alignment table.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace fixtures {

struct CellAvg {
  const char* task;
  const char* transform;
  double dsup;
  double dmono;
  double bz;
};

// Averages over the four languages as printed in the headline table.
// XQuAD has no perm/syn rows (span-unsafe transforms are not scored).
inline const std::vector<CellAvg> kHeadlineAverages = {
    {"xnli", "inv", -10.2, -13.0, 58.4},   {"xnli", "perm", -3.6, -8.6, 62.6},
    {"xnli", "syn", -0.9, -1.1, 67.8},     {"xnli", "translit", -1.0, -36.7, 69.3},
    {"ner", "inv", -49.1, -46.7, 37.9},    {"ner", "perm", -26.3, -35.4, 47.3},
    {"ner", "syn", -14.6, -16.6, 62.9},    {"ner", "translit", -1.9, -82.6, 83.7},
    {"pos", "inv", -30.2, -36.2, 64.2},    {"pos", "perm", -11.2, -25.2, 73.6},
    {"pos", "syn", -4.4, -7.6, 89.4},      {"pos", "translit", -0.4, -95.0, 95.4},
    {"xquad", "inv", -32.8, -31.0, 22.8},  {"xquad", "translit", 0.0, -55.9, 61.2},
};

struct CellLang {
  const char* task;
  const char* transform;
  const char* language;
  double bz;
  double dsup;
};

// Per-language BZ and dsup; BS is reconstructible as BZ - dsup.
inline const std::vector<CellLang> kPerLanguage = {
    {"xnli", "inv", "en", 73.2, -3.4},      {"xnli", "inv", "fr", 62.5, -9.5},
    {"xnli", "inv", "hi", 43.9, -15.7},     {"xnli", "inv", "ar", 54.0, -12.3},
    {"xnli", "perm", "en", 68.6, -5.0},     {"xnli", "perm", "fr", 68.4, -1.0},
    {"xnli", "perm", "hi", 51.2, -6.2},     {"xnli", "perm", "ar", 62.1, -2.3},
    {"xnli", "syn", "en", 74.1, -1.8},      {"xnli", "syn", "fr", 69.6, -2.2},
    {"xnli", "syn", "hi", 61.6, -0.3},      {"xnli", "syn", "ar", 65.9, 0.7},
    {"xnli", "translit", "en", 74.1, -1.7}, {"xnli", "translit", "fr", 71.6, -1.6},
    {"xnli", "translit", "hi", 63.4, -0.1}, {"xnli", "translit", "ar", 68.0, -0.4},
    {"ner", "inv", "en", 39.8, -44.5},      {"ner", "inv", "fr", 54.5, -34.4},
    {"ner", "inv", "hi", 19.4, -63.9},      {"ner", "inv", "ar", 37.8, -53.6},
    {"ner", "perm", "en", 40.2, -28.5},     {"ner", "perm", "fr", 44.4, -36.0},
    {"ner", "perm", "hi", 38.5, -21.9},     {"ner", "perm", "ar", 66.2, -18.8},
    {"ner", "syn", "en", 61.1, -7.8},       {"ner", "syn", "fr", 59.6, -21.9},
    {"ner", "syn", "hi", 64.8, -8.4},       {"ner", "syn", "ar", 66.1, -20.1},
    {"ner", "translit", "en", 78.0, -2.1},  {"ner", "translit", "fr", 84.3, -3.1},
    {"ner", "translit", "hi", 84.4, -0.5},  {"ner", "translit", "ar", 88.0, -1.9},
    {"pos", "inv", "en", 94.4, -0.7},       {"pos", "inv", "fr", 74.3, -22.7},
    {"pos", "inv", "hi", 19.0, -74.5},      {"pos", "inv", "ar", 69.2, -23.0},
    {"pos", "perm", "en", 78.3, -11.9},     {"pos", "perm", "fr", 82.0, -12.2},
    {"pos", "perm", "hi", 51.0, -14.0},     {"pos", "perm", "ar", 83.1, -6.5},
    {"pos", "syn", "en", 92.9, -0.9},       {"pos", "syn", "fr", 93.5, -3.2},
    {"pos", "syn", "hi", 91.6, -3.3},       {"pos", "syn", "ar", 79.4, -10.0},
    {"pos", "translit", "en", 94.6, -0.5},  {"pos", "translit", "fr", 97.2, -0.2},
    {"pos", "translit", "hi", 96.5, -0.1},  {"pos", "translit", "ar", 93.2, -0.8},
    {"xquad", "inv", "en", 30.4, -43.2},    {"xquad", "inv", "fr", 25.2, -29.5},
    {"xquad", "inv", "hi", 14.5, -27.3},    {"xquad", "inv", "ar", 21.0, -31.2},
    {"xquad", "translit", "en", 72.4, -4.0},
    {"xquad", "translit", "fr", 60.9, -1.0},
    {"xquad", "translit", "hi", 57.3, 10.6},
    {"xquad", "translit", "ar", 54.0, -0.5},
};

// Transliteration variants: alignment fraction (in percent, as
// reported) and dsup per task, sorted by alignment descending.
inline const std::vector<std::string> kAlignSettings = {
    "parallel", "translit.syn", "nonparallel_same", "nonparallel_diff", "translit.inv",
    "translit.perm"};
inline const std::vector<double> kAlignValues = {90.0, 57.3, 43.0, 11.8, 0.16, 0.01};
inline const std::map<std::string, std::vector<double>> kAlignDsup = {
    {"xnli", {-2.1, -5.7, -3.8, -5.7, -19.2, -27.7}},
    {"ner", {-2.3, -14.2, -4.1, -14.3, -51.5, -46.3}},
    {"pos", {-0.5, -2.0, -0.7, -1.5, -42.7, -59.0}},
};
// rank correlations as published, for side-by-side reporting
inline const std::map<std::string, double> kPublishedRho = {
    {"xnli", 0.94}, {"ner", 0.93}, {"pos", 0.89}};

}  // namespace fixtures
