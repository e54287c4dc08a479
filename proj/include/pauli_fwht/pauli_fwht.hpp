#pragma once

#include "bits.hpp"
#include "error.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "pauli.hpp"
#include "random.hpp"
#include "structure.hpp"
#include "transform.hpp"
#include "version.hpp"

#include "oracle.hpp"
