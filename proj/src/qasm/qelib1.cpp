// Copyright 2026 The DiaQ Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diaq/qasm/qasm.hpp"

namespace diaq::qasm {

// Standard qelib1.inc definitions for the gates that are not catalog
// primitives. Catalog gates (u3 u2 u1 cx id x y z h s sdg t tdg rx ry rz cz
// swap ccx) are mapped directly and never expanded.
std::string_view qelib1_source() noexcept {
    return R"QASM(
gate u0(gamma) q { id q; }
gate u(theta,phi,lambda) q { u3(theta,phi,lambda) q; }
gate p(lambda) q { u1(lambda) q; }
gate sx a { sdg a; h a; sdg a; }
gate sxdg a { s a; h a; s a; }
gate cy a,b { sdg b; cx a,b; s b; }
gate ch a,b { s b; h b; t b; cx a,b; tdg b; h b; sdg b; }
gate crx(lambda) a,b {
  u1(pi/2) b;
  cx a,b;
  u3(-lambda/2,0,0) b;
  cx a,b;
  u3(lambda/2,-pi/2,0) b;
}
gate cry(lambda) a,b { ry(lambda/2) b; cx a,b; ry(-lambda/2) b; cx a,b; }
gate crz(lambda) a,b { u1(lambda/2) b; cx a,b; u1(-lambda/2) b; cx a,b; }
gate cu1(lambda) a,b {
  u1(lambda/2) a;
  cx a,b;
  u1(-lambda/2) b;
  cx a,b;
  u1(lambda/2) b;
}
gate cp(lambda) a,b {
  p(lambda/2) a;
  cx a,b;
  p(-lambda/2) b;
  cx a,b;
  p(lambda/2) b;
}
gate cu3(theta,phi,lambda) c,t {
  u1((lambda+phi)/2) c;
  u1((lambda-phi)/2) t;
  cx c,t;
  u3(-theta/2,0,-(phi+lambda)/2) t;
  cx c,t;
  u3(theta/2,phi,0) t;
}
gate cu(theta,phi,lambda,gamma) c,t {
  p(gamma) c;
  p((lambda+phi)/2) c;
  p((lambda-phi)/2) t;
  cx c,t;
  u(-theta/2,0,-(phi+lambda)/2) t;
  cx c,t;
  u(theta/2,phi,0) t;
}
gate csx a,b { h b; cu1(pi/2) a,b; h b; }
gate cswap a,b,c { cx c,b; ccx a,b,c; cx c,b; }
gate rxx(theta) a,b {
  u3(pi/2,theta,0) a;
  h b;
  cx a,b;
  u1(-theta) b;
  cx a,b;
  h b;
  u2(-pi,pi-theta) a;
}
gate rzz(theta) a,b { cx a,b; u1(theta) b; cx a,b; }
gate rccx a,b,c {
  u2(0,pi) c;
  u1(pi/4) c;
  cx b,c;
  u1(-pi/4) c;
  cx a,c;
  u1(pi/4) c;
  cx b,c;
  u1(-pi/4) c;
  u2(0,pi) c;
}
gate c3x a,b,c,d {
  h d;
  p(pi/8) a; p(pi/8) b; p(pi/8) c; p(pi/8) d;
  cx a,b;
  p(-pi/8) b;
  cx a,b;
  cx b,c;
  p(-pi/8) c;
  cx a,c;
  p(pi/8) c;
  cx b,c;
  p(-pi/8) c;
  cx a,c;
  cx c,d;
  p(-pi/8) d;
  cx b,d;
  p(pi/8) d;
  cx c,d;
  p(-pi/8) d;
  cx a,d;
  p(pi/8) d;
  cx c,d;
  p(-pi/8) d;
  cx b,d;
  p(pi/8) d;
  cx c,d;
  p(-pi/8) d;
  cx a,d;
  h d;
}
)QASM";
}

} // namespace diaq::qasm
