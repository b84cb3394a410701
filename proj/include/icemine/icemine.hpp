#pragma once

#include "icemine/context.hpp"
#include "icemine/document.hpp"
#include "icemine/genminers.hpp"
#include "icemine/lattice.hpp"
#include "icemine/oracle.hpp"
#include "icemine/pipeline.hpp"
#include "icemine/rules.hpp"
