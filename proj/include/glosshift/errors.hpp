#pragma once

#include <exception>
#include <string>
#include <utility>
#include <vector>

namespace glosshift {

// Base for all domain errors. The CLI maps Error to exit code 1 and
// IoError to exit code 2.
class Error : public std::exception {
 public:
  explicit Error(std::string msg) : msg_(std::move(msg)) {}
  const char* what() const noexcept override { return msg_.c_str(); }
  // Prepends context, e.g. the sentence index, before rethrowing.
  void add_context(const std::string& ctx) { msg_ = ctx + ": " + msg_; }

 private:
  std::string msg_;
};

struct IoError : Error {
  using Error::Error;
};

// corpus-transforms
struct UnmappedCharacter : Error {
  using Error::Error;
};
struct AlphabetOverflow : Error {
  using Error::Error;
};
struct MissingSecondCorpus : Error {
  using Error::Error;
};

// syntax-reorder
struct MalformedConllu : Error {
  MalformedConllu(std::size_t line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line_no(line_no) {}
  std::size_t line_no;
};
struct CyclicTree : Error {
  explicit CyclicTree(const std::string& sentence_id)
      : Error("cyclic dependency tree in sentence '" + sentence_id + "'"),
        sentence_id(sentence_id) {}
  std::string sentence_id;
};
struct EmptyTreebank : Error {
  using Error::Error;
};

// subword
struct TargetTooSmall : Error {
  using Error::Error;
};

// task-datasets
struct LengthMismatch : Error {
  using Error::Error;
};
struct SpanUnsafeTransform : Error {
  using Error::Error;
};
struct SpanLost : Error {
  using Error::Error;
};

// embed-sgns
struct EmptyCorpus : Error {
  using Error::Error;
};
struct MalformedTable : Error {
  using Error::Error;
};

// analysis
struct MissingToken : Error {
  explicit MissingToken(std::vector<std::string> tokens);
  std::vector<std::string> tokens;
};
struct DegenerateInput : Error {
  using Error::Error;
};
struct InsufficientOverlap : Error {
  using Error::Error;
};
struct MissingOperand : Error {
  using Error::Error;
};

}  // namespace glosshift
