#pragma once

#include <string>

#include "rootposet/root_system.hpp"

inline rootposet::RootSystem sys(const std::string& name) {
    return rootposet::RootSystem::build(rootposet::RootSystemId::parse(name));
}
