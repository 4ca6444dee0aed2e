// The generated tileset, built once per test binary.
#pragma once

#include "sssst/compiler.hpp"

inline const sssst::Tileset& generated() {
    static const sssst::Tileset ts = sssst::generate();
    return ts;
}
