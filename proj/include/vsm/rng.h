// include/vsm/rng.h

// Copyright 2026  The vsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef VSM_RNG_H_
#define VSM_RNG_H_

#include <cstdint>
#include <random>

namespace vsm {

/**
   Seeded generator with a fully specified output stream, so synthetic
   cohorts can be reproduced by other implementations:

     - raw draws are std::mt19937_64 seeded with the 64-bit seed;
     - Uniform() = (raw >> 11) * 2^-53, in [0, 1);
     - Gaussian() uses Box-Muller on two successive uniforms u1, u2:
         r = sqrt(-2 ln(1 - u1)), z0 = r cos(2 pi u2), z1 = r sin(2 pi u2),
       returning z0 first and z1 on the following call.

   The standard library's distributions are implementation-defined and are
   not used.
*/
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Gaussian();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace vsm

#endif  // VSM_RNG_H_
