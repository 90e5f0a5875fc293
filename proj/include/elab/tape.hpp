// Compiles a validated model into a linear instruction tape evaluated over
// blocks of units (one slot = one vector of per-unit values). All evaluation
// contexts of a run share the block: factual, do(Z=0), do(Z=1), optional
// do(X=a)/do(X=b), the derivative expressions, and the derived per-unit
// effect columns.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elab/kernels.hpp"
#include "elab/model.hpp"

namespace elab::tape {

enum class Op : std::uint8_t {
  FillUniform,    // imm=lo, imm2=hi, exog_k
  FillBernoulli,  // imm=p, exog_k
  FillNormal,     // imm=mu, imm2=sigma, exog_k
  Broadcast,      // imm
  Copy,
  Add, Sub, Mul, Div, Neg,
  AddC, RSubC, MulC, DivC, RDivC,  // one constant operand in imm
  Exp, Log,
  PowI,  // integer exponent in iimm
  PowF,  // real exponent in imm
};

struct Instr {
  Op op;
  std::uint16_t dst = 0;
  std::uint16_t a = 0;
  std::uint16_t b = 0;
  double imm = 0.0;
  double imm2 = 0.0;
  long long iimm = 0;
  std::uint32_t exog_k = 0;
};

struct Outputs {
  // Slot per named per-unit column; kInvalid when not produced.
  static constexpr std::uint16_t kInvalid = 0xFFFF;
  std::uint16_t z = kInvalid, x = kInvalid, y = kInvalid;
  std::uint16_t x0 = kInvalid, x1 = kInvalid, y0 = kInvalid, y1 = kInvalid;
  std::uint16_t beta_zx = kInvalid, beta_zy = kInvalid;
  std::uint16_t dydx = kInvalid, dxdz = kInvalid;
  std::uint16_t idgap = kInvalid;              // beta_zy - dydx*beta_zx
  std::uint16_t rf_dydz = kInvalid;            // reduced-form dY/dZ at factual draws
  std::uint16_t ace_diff = kInvalid;           // Y(do X=to) - Y(do X=from)
};

struct CompileOptions {
  bool reduced_form = false;
  std::optional<std::pair<double, double>> ace;  // (from, to)
};

struct Program {
  std::vector<Instr> instrs;
  std::uint16_t slot_count = 0;
  std::uint32_t exog_count = 0;  // noise stream stride
  Outputs out;
  std::vector<std::uint16_t> finite_checks;  // slots that must be finite for a valid unit
};

Program compile(const StructuralModel& m, const CompileOptions& opts = {});

// Scratch for one worker: slot_count slabs of `capacity` doubles plus the
// per-lane domain-error column.
class Block {
 public:
  Block(const Program& p, std::size_t capacity);

  double* slot(std::uint16_t s) { return data_.data() + std::size_t(s) * capacity_; }
  const double* slot(std::uint16_t s) const { return data_.data() + std::size_t(s) * capacity_; }
  double* err() { return err_.data(); }
  std::size_t capacity() const { return capacity_; }

 private:
  std::size_t capacity_;
  std::vector<double> data_;
  std::vector<double> err_;
};

// Evaluates units [unit0, unit0+width) into the block with the given kernel
// backend. width <= block capacity.
void run_block(const Program& p, const kernels::Backend& k, Block& blk,
               std::uint64_t seed, std::uint64_t unit0, std::size_t width);

// True when the lane produced no domain fault and every checked slot is finite.
bool lane_valid(const Program& p, const Block& blk, std::size_t lane);

}  // namespace elab::tape
