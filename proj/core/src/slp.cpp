#include "rootsum/oracle.hpp"

namespace rootsum {

StraightLineProgram::StraightLineProgram(std::vector<SlpInstr> instrs)
    : instrs_(std::move(instrs)) {
  if (instrs_.empty()) throw DomainError("empty straight-line program");
  for (size_t i = 0; i < instrs_.size(); ++i) {
    const SlpInstr& in = instrs_[i];
    auto check = [&](int idx) {
      if (idx < 0 || static_cast<size_t>(idx) >= i)
        throw DomainError("SLP operand must reference an earlier instruction");
    };
    switch (in.op) {
      case SlpInstr::Op::input:
      case SlpInstr::Op::constant:
        break;
      case SlpInstr::Op::smul:
        check(in.a);
        break;
      default:
        check(in.a);
        check(in.b);
    }
  }
}

DualValue StraightLineProgram::run(Complex x) const {
  std::vector<DualValue> v;
  v.reserve(instrs_.size());
  for (const SlpInstr& in : instrs_) {
    switch (in.op) {
      case SlpInstr::Op::input:
        v.push_back(DualValue::input(x));
        break;
      case SlpInstr::Op::constant:
        v.push_back(DualValue::constant(in.k));
        break;
      case SlpInstr::Op::add:
        v.push_back(v[static_cast<size_t>(in.a)] + v[static_cast<size_t>(in.b)]);
        break;
      case SlpInstr::Op::sub:
        v.push_back(v[static_cast<size_t>(in.a)] - v[static_cast<size_t>(in.b)]);
        break;
      case SlpInstr::Op::mul:
        v.push_back(v[static_cast<size_t>(in.a)] * v[static_cast<size_t>(in.b)]);
        break;
      case SlpInstr::Op::div:
        v.push_back(v[static_cast<size_t>(in.a)] / v[static_cast<size_t>(in.b)]);
        break;
      case SlpInstr::Op::smul: {
        DualValue s = v[static_cast<size_t>(in.a)];
        v.push_back({in.k * s.value, in.k * s.deriv});
        break;
      }
    }
  }
  return v.back();
}

}  // namespace rootsum
