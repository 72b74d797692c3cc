#pragma once

#include "quivkit/adhm_p2.hpp"
#include "quivkit/blowup.hpp"
#include "quivkit/criteria.hpp"
#include "quivkit/error.hpp"
#include "quivkit/extension.hpp"
#include "quivkit/factor.hpp"
#include "quivkit/field.hpp"
#include "quivkit/flag.hpp"
#include "quivkit/hirzebruch.hpp"
#include "quivkit/matrix.hpp"
#include "quivkit/minimal.hpp"
#include "quivkit/pencil.hpp"
#include "quivkit/poly.hpp"
#include "quivkit/quiver.hpp"
#include "quivkit/random.hpp"
#include "quivkit/representation.hpp"
#include "quivkit/sample.hpp"
#include "quivkit/stability.hpp"
