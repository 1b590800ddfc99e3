#pragma once

#include "wheelfree/chain.hpp"
#include "wheelfree/classification.hpp"
#include "wheelfree/generators.hpp"
#include "wheelfree/graph.hpp"
#include "wheelfree/harness.hpp"
#include "wheelfree/io.hpp"
#include "wheelfree/oracle.hpp"
#include "wheelfree/recognizer.hpp"
#include "wheelfree/verify.hpp"
