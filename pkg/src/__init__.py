# Linear quaternion functions: reduction, evaluation and composition
