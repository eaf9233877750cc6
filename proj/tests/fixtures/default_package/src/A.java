interface A {
  default void foo() {}
}
