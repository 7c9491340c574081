#include "qshkit/subman.hpp"

namespace qshkit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_evaluated: return "not-evaluated";
  }
  return "not-evaluated";
}

}  // namespace qshkit
