#pragma once

// Construction specs that cannot be expressed as ready-made Elements.

namespace hc {

// side 0 = left factor element, 1 = right factor element, 2 = core power
struct AmalgamGenSpec {
  int side = 0;
  int val = 0;
};

}  // namespace hc
