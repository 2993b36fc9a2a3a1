#pragma once

#include "logint/core.hpp"
#include "logint/special.hpp"
#include "logint/combinat.hpp"
#include "logint/lerch.hpp"
#include "logint/quad.hpp"
#include "logint/rhs.hpp"
#include "logint/identities.hpp"
#include "logint/catalog.hpp"
#include "logint/verify.hpp"
