#pragma once

#include "kscoset/affine.hpp"
#include "kscoset/cache.hpp"
#include "kscoset/cli.hpp"
#include "kscoset/coset.hpp"
#include "kscoset/document.hpp"
#include "kscoset/duality.hpp"
#include "kscoset/modular.hpp"
#include "kscoset/rational.hpp"
