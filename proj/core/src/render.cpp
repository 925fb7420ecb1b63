namespace lozenge {}
